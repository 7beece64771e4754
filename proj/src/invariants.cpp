#include "momega/invariants.hpp"

#include <algorithm>

#include "momega/chains.hpp"
#include "momega/errors.hpp"

namespace momega {

namespace {

std::int64_t signed_binomial(int n, int k, int parity) {
    std::int64_t b = static_cast<std::int64_t>(binomial(n, k));
    return (parity % 2 == 0) ? b : -b;
}

// Counts subsets by (rank, size) via the closure map: every subset spans exactly one flat, so
// C(|F|, s) = sum over flats F' <= F of (#size-s spanning subsets of F'). Needs only the flat
// lattice, which the rank <= 3 fast path can enumerate for any n <= 24.
std::vector<std::vector<std::int64_t>> counts_via_flats(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    std::vector<FlatRecord> fl = flats(m);  // sorted by (rank, size, mask)
    std::size_t nf = fl.size();
    // spanning[i][s] = #size-s subsets of fl[i] with closure exactly fl[i]
    std::vector<std::vector<std::int64_t>> spanning(nf, std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t i = 0; i < nf; ++i) {
        int size = popcount(fl[i].elements);
        for (int s = 0; s <= size; ++s) spanning[i][s] = static_cast<std::int64_t>(binomial(size, s));
        for (std::size_t j = 0; j < i; ++j) {
            if (!is_subset(fl[j].elements, fl[i].elements)) continue;
            for (int s = 0; s <= n; ++s) spanning[i][s] -= spanning[j][s];
        }
    }
    std::vector<std::vector<std::int64_t>> counts(r + 1, std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t i = 0; i < nf; ++i)
        for (int s = 0; s <= n; ++s) counts[fl[i].rank][s] += spanning[i][s];
    return counts;
}

std::vector<std::vector<std::int64_t>> counts_via_table(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    RankTable table(m);
    std::vector<std::vector<std::int64_t>> counts(r + 1, std::vector<std::int64_t>(n + 1, 0));
    for (Subset s = 0; s < (Subset{1} << n); ++s) ++counts[table[s]][popcount(s)];
    return counts;
}

std::vector<std::vector<std::int64_t>> tutte_from_counts(
    int n, int r, const std::vector<std::vector<std::int64_t>>& counts) {
    // corank-nullity polynomial: m'[a][b] = #subsets with corank a, nullity b
    int maxCo = r, maxNu = n - r;
    std::vector<std::vector<std::int64_t>> cn(maxCo + 1, std::vector<std::int64_t>(maxNu + 1, 0));
    for (int k = 0; k <= r; ++k)
        for (int s = 0; s <= n; ++s) {
            if (counts[k][s] == 0) continue;
            cn[r - k][s - k] += counts[k][s];
        }
    // T(x,y) = N(x-1, y-1): binomial change of basis
    std::vector<std::vector<std::int64_t>> t(maxCo + 1, std::vector<std::int64_t>(maxNu + 1, 0));
    for (int i = 0; i <= maxCo; ++i)
        for (int j = 0; j <= maxNu; ++j) {
            std::int64_t acc = 0;
            for (int a = i; a <= maxCo; ++a)
                for (int b = j; b <= maxNu; ++b)
                    if (cn[a][b] != 0)
                        acc += cn[a][b] * signed_binomial(a, i, a - i) * signed_binomial(b, j, b - j);
            t[i][j] = acc;
        }
    return t;
}

}  // namespace

std::vector<std::vector<std::int64_t>> subset_counts_by_rank_size(const Matroid& m) {
    if (m.ground_size() <= 16) return counts_via_table(m);
    if (m.rank() <= 3) return counts_via_flats(m);
    throw SizeCapError("subset counting size cap (n <= 16 or rank <= 3)");
}

std::vector<std::vector<std::int64_t>> tutte(const Matroid& m) {
    if (m.ground_size() > 16) throw SizeCapError("tutte size cap");
    return tutte_from_counts(m.ground_size(), m.rank(), counts_via_table(m));
}

std::int64_t tutte_evaluate(const std::vector<std::vector<std::int64_t>>& t, std::int64_t x,
                            std::int64_t y) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::int64_t xp = 1;
        for (std::size_t k = 0; k < i; ++k) xp *= x;
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            std::int64_t yp = 1;
            for (std::size_t k = 0; k < j; ++k) yp *= y;
            acc += t[i][j] * xp * yp;
        }
    }
    return acc;
}

std::int64_t beta_invariant(const Matroid& m) {
    const Matroid* work = &m;
    Matroid dualled = m;
    if (m.ground_size() > 16 && m.rank() > 3) {
        if (m.ground_size() - m.rank() > 3) throw SizeCapError("beta size cap");
        dualled = dual(m);  // beta is self-dual for n >= 2
        work = &dualled;
    }
    auto t = tutte_from_counts(work->ground_size(), work->rank(),
                               subset_counts_by_rank_size(*work));
    if (t.size() < 2) return 0;  // rank 0: T has no x coefficient
    return t[1].empty() ? 0 : t[1][0];
}

InvariantVector invariant_vector(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    InvariantVector out;
    out.basesCount = static_cast<std::int64_t>(m.bases().size());

    bool corankPath = n > 16 && r > 3;
    if (corankPath && n - r > 3)
        throw SizeCapError("invariant vector size cap (n <= 16, rank <= 3 or corank <= 3)");
    Matroid star = corankPath ? dual(m) : m;  // circuits of m = cocircuits of star

    // independent counts from subset counts (spanning sets of the dual when on the corank path)
    auto counts = subset_counts_by_rank_size(corankPath ? star : m);
    out.independentCounts.assign(r + 1, 0);
    if (!corankPath) {
        for (int k = 0; k <= r; ++k) out.independentCounts[k] = counts[k][k];
    } else {
        // S independent in m of size k <=> E\S spanning in m*, |E\S| = n-k
        int rs = star.rank();
        for (int k = 0; k <= r; ++k) out.independentCounts[k] = counts[rs][n - k];
    }

    if (!corankPath) {
        for (const FlatRecord& f : flats(m)) ++out.flatsByRankSize[{f.rank, popcount(f.elements)}];
        out.whitney.assign(r + 1, 0);
        for (const auto& [key, count] : out.flatsByRankSize) out.whitney[key.first] += count;
        auto [circuits, g] = circuits_and_girth(m);
        for (Subset c : circuits) ++out.circuitsBySize[popcount(c)];
        out.girth = g;
        out.connected = is_connected(m);
    } else {
        // circuits of m are complements of hyperplanes of the rank<=3 dual
        std::vector<Subset> circuits;
        for (const FlatRecord& f : flats(star))
            if (f.rank == star.rank() - 1) circuits.push_back(star.ground_set() & ~f.elements);
        for (Subset c : circuits) ++out.circuitsBySize[popcount(c)];
        out.girth = n + 1;
        for (Subset c : circuits) out.girth = std::min(out.girth, popcount(c));
        out.connected = is_connected(star);
        // flat counts stay empty on this path (documented per-field cap)
    }

    if (n <= 16) {
        out.tutteCoefficients = tutte(m);
        out.beta = (*out.tutteCoefficients).size() > 1 ? (*out.tutteCoefficients)[1][0] : 0;
        if (validation_enabled()) {
            if (tutte_evaluate(*out.tutteCoefficients, 1, 1) != out.basesCount)
                throw CheckError("T(1,1) != basesCount");
            if (*out.beta < 0) throw CheckError("beta < 0");
        }
    } else if (r <= 3 || n - r <= 3) {
        out.beta = beta_invariant(m);
    }
    return out;
}

bool has_split_excluded_minor(const Matroid& m) {
    int n = m.ground_size();
    if (n > 12) throw SizeCapError("minor search size cap (n <= 12)");
    if (n < 4) return false;
    RankTable table(m);
    Subset ground = m.ground_set();
    for (Subset kept : all_subsets_of_size(n, 4)) {
        std::vector<int> k = elements(kept);
        Subset rest = ground & ~kept;
        // every split of the remaining elements into contract / delete
        std::vector<int> restElems = elements(rest);
        int restCount = static_cast<int>(restElems.size());
        for (Subset pick = 0; pick < (Subset{1} << restCount); ++pick) {
            Subset con = 0;
            for (int i = 0; i < restCount; ++i)
                if (contains(pick, i)) con = with(con, restElems[i]);
            int rc = table[con];
            auto minorRank = [&](Subset s) { return table[s | con] - rc; };
            if (minorRank(kept) != 2) continue;
            // pattern of U01+U11+U12: singleton ranks one 0 / three 1, a unique parallel pair
            int loopAt = -1, loopCount = 0;
            for (int i = 0; i < 4; ++i)
                if (minorRank(Subset{1} << k[i]) == 0) {
                    loopAt = i;
                    ++loopCount;
                }
            if (loopCount != 1) continue;
            std::vector<int> live;
            for (int i = 0; i < 4; ++i)
                if (i != loopAt) live.push_back(k[i]);
            int pairs1 = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    Subset p = with(with(Subset{0}, live[a]), live[b]);
                    if (minorRank(p) == 1) ++pairs1;
                }
            if (pairs1 == 1) return true;
        }
    }
    return false;
}

bool cyclic_flats_pairwise_incomparable(const Matroid& m) {
    std::vector<FlatRecord> zs = cyclic_flats(m);
    std::vector<Subset> nontrivial;
    for (const FlatRecord& z : zs)
        if (z.elements != 0 && z.elements != m.ground_set()) nontrivial.push_back(z.elements);
    for (std::size_t i = 0; i < nontrivial.size(); ++i)
        for (std::size_t j = i + 1; j < nontrivial.size(); ++j)
            if (is_subset(nontrivial[i], nontrivial[j]) || is_subset(nontrivial[j], nontrivial[i]))
                return false;
    return true;
}

MatroidClasses classify(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    MatroidClasses out;

    int g;
    int dualGirth;
    if (n <= 16) {
        g = girth(m);
        dualGirth = girth(dual(m));
    } else if (r <= 3) {
        g = girth(m);
        // min cocircuit size = n - max hyperplane size
        int maxHyper = 0;
        for (const FlatRecord& f : flats(m))
            if (f.rank == r - 1) maxHyper = std::max(maxHyper, popcount(f.elements));
        dualGirth = n - maxHyper;
    } else if (n - r <= 3) {
        Matroid star = dual(m);
        dualGirth = girth(star);
        int maxHyper = 0;
        for (const FlatRecord& f : flats(star))
            if (f.rank == star.rank() - 1) maxHyper = std::max(maxHyper, popcount(f.elements));
        g = n - maxHyper;
    } else {
        throw SizeCapError("classify size cap (n <= 16, rank <= 3 or corank <= 3)");
    }

    out.loopless = g >= 2;
    out.simple = g >= 3;
    out.paving = g >= r;
    out.copaving = dualGirth >= n - r;
    out.sparsePaving = out.paving && out.copaving;
    out.connected = (n <= 16 || r <= 3) ? is_connected(m) : is_connected(dual(m));
    out.seriesParallel = out.connected && n >= 2 && beta_invariant(m) == 1;

    // modular: rk(F1) + rk(F2) = rk(F1 meet F2) + rk(F1 join F2) over all flat pairs; needs
    // the flat lattice, so it stays unset on the corank-<=3 big-n path
    if (n <= 16 || r <= 3) {
        std::vector<FlatRecord> fl = flats(m);
        bool modular = true;
        for (std::size_t i = 0; i < fl.size() && modular; ++i)
            for (std::size_t j = i + 1; j < fl.size() && modular; ++j) {
                int meet = rank(m, fl[i].elements & fl[j].elements);
                int join = rank(m, fl[i].elements | fl[j].elements);
                if (fl[i].rank + fl[j].rank != meet + join) modular = false;
            }
        out.modular = modular;
    }

    if (n <= 12) out.elementarySplit = !has_split_excluded_minor(m);
    return out;
}

}  // namespace momega
