#include "momega/matroid.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "momega/errors.hpp"

namespace momega {

Matroid::Matroid(int n, int r, std::vector<Subset> bases, Validate v)
    : n_(n), r_(r), bases_(std::move(bases)) {
    if (n < 0 || n > kMaxGroundSet) throw InputError("ground-set size out of range: " + std::to_string(n));
    if (r < 0 || r > n) throw InputError("rank out of range");
    if (bases_.empty()) throw InputError("empty basis family");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    Subset ground = full_set(n_);
    for (Subset b : bases_) {
        if (!is_subset(b, ground)) throw InputError("basis outside the ground set");
        if (popcount(b) != r_) throw InputError("basis of wrong size");
    }
    if (v == Validate::yes) {
        std::string why;
        if (!exchange_property_holds(*this, &why)) throw InputError("exchange axiom fails: " + why);
    }
}

bool Matroid::is_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

int rank(const Matroid& m, Subset s) {
    int best = 0;
    for (Subset b : m.bases()) best = std::max(best, popcount(b & s));
    return best;
}

Subset closure(const Matroid& m, Subset s) {
    int rk = rank(m, s);
    Subset out = s;
    for (int e = 0; e < m.ground_size(); ++e) {
        if (contains(s, e)) continue;
        if (rank(m, with(s, e)) == rk) out = with(out, e);
    }
    return out;
}

RankTable::RankTable(const Matroid& m) : n_(m.ground_size()) {
    if (n_ > 20) throw SizeCapError("rank table size cap (n <= 20)");
    std::size_t size = std::size_t{1} << n_;
    // Mark independent sets (subsets of bases), then fill ranks by one-element descent.
    std::vector<bool> indep(size, false);
    for (Subset b : m.bases()) {
        for (Subset s = b;; s = (s - 1) & b) {
            indep[s] = true;
            if (s == 0) break;
        }
    }
    ranks_.assign(size, 0);
    for (Subset s = 1; s < size; ++s) {
        if (indep[s]) {
            ranks_[s] = static_cast<std::uint8_t>(popcount(s));
        } else {
            int best = 0;
            for (Subset t = s; t;) {
                int e = std::countr_zero(t);
                t &= t - 1;
                best = std::max(best, static_cast<int>(ranks_[without(s, e)]));
            }
            ranks_[s] = static_cast<std::uint8_t>(best);
        }
    }
}

Subset RankTable::closure(Subset s) const {
    Subset out = s;
    int rk = ranks_[s];
    for (int e = 0; e < n_; ++e) {
        if (contains(s, e)) continue;
        if (ranks_[with(s, e)] == rk) out = with(out, e);
    }
    return out;
}

namespace {

// Enumerates independent sets depth-first, extending by elements above the current maximum.
template <typename RankFn, typename Visit>
void walk_independent_sets(int n, int r, const RankFn& rk, const Visit& visit, Subset s, int size,
                           int minNext) {
    visit(s, size);
    if (size == r) return;
    for (int e = minNext; e < n; ++e) {
        Subset t = with(s, e);
        if (rk(t) == size + 1) walk_independent_sets(n, r, rk, visit, t, size + 1, e + 1);
    }
}

}  // namespace

std::pair<std::vector<Subset>, int> circuits_and_girth(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    std::vector<Subset> circuits;
    int g = n + 1;
    // Circuits have size <= r+1; a dependent set is a circuit iff all its deletions are independent.
    std::optional<RankTable> table;
    if (n <= 16) table.emplace(m);
    auto rk = [&](Subset s) { return table ? (*table)[s] : rank(m, s); };
    for (int k = 1; k <= r + 1 && k <= n; ++k) {
        for (Subset s : all_subsets_of_size(n, k)) {
            if (rk(s) != k - 1) continue;
            bool minimal = true;
            for (Subset t = s; t && minimal;) {
                int e = std::countr_zero(t);
                t &= t - 1;
                if (rk(without(s, e)) != k - 1) minimal = false;
            }
            if (minimal) {
                circuits.push_back(s);
                g = std::min(g, k);
            }
        }
    }
    return {circuits, g};
}

int girth(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    std::optional<RankTable> table;
    if (n <= 16) table.emplace(m);
    auto rk = [&](Subset s) { return table ? (*table)[s] : rank(m, s); };
    for (int k = 1; k <= r + 1 && k <= n; ++k)
        for (Subset s : all_subsets_of_size(n, k))
            if (rk(s) < k) return k;
    return n + 1;
}

std::vector<FlatRecord> flats(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    std::unordered_set<Subset> seen;
    std::vector<FlatRecord> out;
    auto addClosure = [&](Subset f, int rk) {
        if (seen.insert(f).second) out.push_back({f, rk});
    };
    if (n <= 16) {
        RankTable table(m);
        walk_independent_sets(
            n, r, [&](Subset s) { return table[s]; },
            [&](Subset s, int size) { addClosure(table.closure(s), size); }, 0, 0, 0);
    } else if (r <= 3) {
        // Flats of rank <= 2 are closures of independent sets of size <= 2; the ground set is
        // the unique rank-r flat.
        addClosure(closure(m, 0), 0);
        for (int e = 0; e < n; ++e)
            if (rank(m, with(0, e)) == 1) addClosure(closure(m, with(0, e)), 1);
        for (Subset p : all_subsets_of_size(n, 2))
            if (rank(m, p) == 2) addClosure(closure(m, p), 2);
        if (r == 3) addClosure(m.ground_set(), 3);
    } else {
        throw SizeCapError("flat enumeration size cap (n <= 16, or rank <= 3)");
    }
    std::sort(out.begin(), out.end(), [](const FlatRecord& a, const FlatRecord& b) {
        return std::tuple(a.rank, popcount(a.elements), a.elements) <
               std::tuple(b.rank, popcount(b.elements), b.elements);
    });
    return out;
}

std::vector<FlatRecord> cyclic_flats(const Matroid& m) {
    std::vector<FlatRecord> out;
    for (const FlatRecord& f : flats(m)) {
        bool cyclic = true;
        for (Subset t = f.elements; t && cyclic;) {
            int e = std::countr_zero(t);
            t &= t - 1;
            if (rank(m, without(f.elements, e)) != f.rank) cyclic = false;
        }
        if (cyclic) out.push_back(f);
    }
    return out;
}

Subset loops(const Matroid& m) {
    Subset all = m.ground_set();
    for (Subset b : m.bases()) {
        // loops lie in no basis; anything in some basis is not a loop
        all &= ~b;
        if (!all) break;
    }
    return all;
}

Subset coloops(const Matroid& m) {
    Subset common = m.ground_set();
    for (Subset b : m.bases()) {
        common &= b;
        if (!common) break;
    }
    return common;
}

Matroid dual(const Matroid& m) {
    Subset ground = m.ground_set();
    std::vector<Subset> complements;
    complements.reserve(m.bases().size());
    for (Subset b : m.bases()) complements.push_back(ground & ~b);
    return Matroid(m.ground_size(), m.ground_size() - m.rank(), std::move(complements),
                   Matroid::Validate::no);
}

Matroid truncation(const Matroid& m) {
    if (m.rank() == 0) throw InputError("rank underflow");
    std::vector<Subset> out;
    std::unordered_set<Subset> seen;
    for (Subset b : m.bases()) {
        for (Subset t = b; t;) {
            int e = std::countr_zero(t);
            t &= t - 1;
            Subset s = without(b, e);
            if (seen.insert(s).second) out.push_back(s);
        }
    }
    return Matroid(m.ground_size(), m.rank() - 1, std::move(out), Matroid::Validate::no);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    if (a.ground_size() + b.ground_size() > kMaxGroundSet)
        throw SizeCapError("direct sum exceeds the ground-set cap");
    std::vector<Subset> out;
    out.reserve(a.bases().size() * b.bases().size());
    for (Subset ba : a.bases())
        for (Subset bb : b.bases()) out.push_back(ba | (bb << a.ground_size()));
    return Matroid(a.ground_size() + b.ground_size(), a.rank() + b.rank(), std::move(out),
                   Matroid::Validate::no);
}

Matroid minor(const Matroid& m, Subset deleteSet, Subset contractSet) {
    if (deleteSet & contractSet) throw InputError("delete and contract sets overlap");
    Subset kept = m.ground_set() & ~(deleteSet | contractSet);
    std::vector<int> keptElems = elements(kept);
    int n2 = static_cast<int>(keptElems.size());
    int rc = rank(m, contractSet);
    int r2 = rank(m, m.ground_set() & ~deleteSet) - rc;
    std::vector<Subset> out;
    for (Subset s : all_subsets_of_size(n2, r2)) {
        Subset lifted = 0;
        for (int i = 0; i < n2; ++i)
            if (contains(s, i)) lifted = with(lifted, keptElems[i]);
        if (rank(m, lifted | contractSet) == r2 + rc) out.push_back(s);
    }
    return Matroid(n2, r2, std::move(out), Matroid::Validate::no);
}

Matroid restriction(const Matroid& m, Subset s) { return minor(m, m.ground_set() & ~s, 0); }

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
    std::vector<Subset> out;
    out.reserve(m.bases().size());
    for (Subset b : m.bases()) {
        Subset img = 0;
        for (int e = 0; e < m.ground_size(); ++e)
            if (contains(b, e)) img = with(img, perm[e]);
        out.push_back(img);
    }
    return Matroid(m.ground_size(), m.rank(), std::move(out), Matroid::Validate::no);
}

std::vector<Subset> connected_components(const Matroid& m) {
    int n = m.ground_size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (Subset c : circuits_and_girth(m).first) {
        std::vector<int> elems = elements(c);
        for (std::size_t i = 1; i < elems.size(); ++i) unite(elems[0], elems[i]);
    }
    std::vector<Subset> comps(n, 0);
    for (int e = 0; e < n; ++e) comps[find(e)] = with(comps[find(e)], e);
    std::vector<Subset> out;
    for (Subset c : comps)
        if (c) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Matroid& m) {
    int n = m.ground_size();
    if (n <= 1) return true;
    if (n <= 16) {
        RankTable table(m);
        Subset ground = m.ground_set();
        for (Subset s = 1; s < ground; ++s)
            if (table[s] + table[ground & ~s] == m.rank()) return false;
        return true;
    }
    return connected_components(m).size() == 1;
}

bool exchange_property_holds(const Matroid& m, std::string* why) {
    const auto& bases = m.bases();
    for (Subset b1 : bases) {
        for (Subset b2 : bases) {
            if (b1 == b2) continue;
            for (Subset t = b1 & ~b2; t;) {
                int e = std::countr_zero(t);
                t &= t - 1;
                bool found = false;
                for (Subset u = b2 & ~b1; u && !found;) {
                    int f = std::countr_zero(u);
                    u &= u - 1;
                    if (m.is_basis(with(without(b1, e), f))) found = true;
                }
                if (!found) {
                    if (why)
                        *why = "B1={" + subset_to_string(b1) + "}, B2={" + subset_to_string(b2) +
                               "}, e=" + std::to_string(e);
                    return false;
                }
            }
        }
    }
    return true;
}

Matroid uniform_matroid(int r, int n) {
    return Matroid(n, r, all_subsets_of_size(n, r), Matroid::Validate::no);
}

}  // namespace momega
