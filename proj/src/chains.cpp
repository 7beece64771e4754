#include "momega/chains.hpp"

#include <algorithm>
#include <atomic>

#include "momega/errors.hpp"

namespace momega {

namespace {

std::atomic<bool> g_validate{true};

void check_signature(int n, int r, const std::vector<std::pair<int, int>>& sig) {
    if (n < 0 || n > kMaxGroundSet || r < 0 || r > n) throw InputError("bad ambient (n, r)");
    if (sig.empty()) throw InputError("empty chain");
    if (sig.front().second != 0) throw InputError("chain bottom must have rank 0");
    for (std::size_t i = 0; i < sig.size(); ++i) {
        auto [s, rho] = sig[i];
        if (s < 0 || s > n || rho < 0 || rho > r)
            throw InputError("chain entry out of range: " + std::to_string(s) + ":" + std::to_string(rho));
        if (i > 0) {
            auto [ps, prho] = sig[i - 1];
            if (rho <= prho) throw InputError("chain ranks must strictly increase");
            if (rho - prho >= s - ps)
                throw InputError("chain rank increment must be below the size increment");
        }
    }
    if (sig.back().first - sig.back().second != n - r)
        throw InputError("chain top must have nullity n-r (top = ground set minus coloops)");
}

}  // namespace

bool validation_enabled() { return g_validate.load(std::memory_order_relaxed); }
void set_validation_enabled(bool on) { g_validate.store(on, std::memory_order_relaxed); }

SchubertProfile::SchubertProfile(int n, int r, std::vector<std::pair<int, int>> signature)
    : n_(n), r_(r), sig_(std::move(signature)) {
    check_signature(n_, r_, sig_);
}

int SchubertProfile::girth() const {
    if (sig_.front().first > 0) return 1;  // loops
    if (sig_.size() == 1) return n_ + 1;   // free matroid
    return sig_[1].second + 1;
}

SchubertProfile SchubertProfile::dual() const {
    std::vector<std::pair<int, int>> out;
    for (auto it = sig_.rbegin(); it != sig_.rend(); ++it)
        out.emplace_back(n_ - it->first, n_ - it->first - r_ + it->second);
    return SchubertProfile(n_, n_ - r_, std::move(out));
}

std::string SchubertProfile::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sig_.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(sig_[i].first) + ":" + std::to_string(sig_[i].second);
    }
    return out;
}

bool SchubertProfile::operator<(const SchubertProfile& o) const {
    if (sig_.size() != o.sig_.size()) return sig_.size() < o.sig_.size();
    return sig_ < o.sig_;
}

CyclicFlatChain::CyclicFlatChain(int n, int r, std::vector<Entry> entries)
    : n_(n), r_(r), entries_(std::move(entries)) {
    std::vector<std::pair<int, int>> sig;
    sig.reserve(entries_.size());
    for (const Entry& e : entries_) sig.emplace_back(popcount(e.elements), e.rank);
    check_signature(n_, r_, sig);
    Subset ground = full_set(n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!is_subset(entries_[i].elements, ground)) throw InputError("chain entry outside ground set");
        if (i > 0 && !is_subset(entries_[i - 1].elements, entries_[i].elements))
            throw InputError("chain entries must be nested");
    }
}

SchubertProfile CyclicFlatChain::profile() const {
    std::vector<std::pair<int, int>> sig;
    sig.reserve(entries_.size());
    for (const Entry& e : entries_) sig.emplace_back(popcount(e.elements), e.rank);
    return SchubertProfile(n_, r_, std::move(sig));
}

bool CyclicFlatChain::is_subchain_of(const CyclicFlatChain& super) const {
    for (const Entry& e : entries_)
        if (std::find(super.entries_.begin(), super.entries_.end(), e) == super.entries_.end())
            return false;
    return true;
}

std::string CyclicFlatChain::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ';';
        out += "{" + subset_to_string(entries_[i].elements) + "}:" + std::to_string(entries_[i].rank);
    }
    return out;
}

bool CyclicFlatChain::operator<(const CyclicFlatChain& o) const {
    SchubertProfile a = profile(), b = o.profile();
    if (a < b) return true;
    if (b < a) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].elements != o.entries_[i].elements)
            return entries_[i].elements < o.entries_[i].elements;
    return false;
}

std::vector<CyclicFlatChain> chain_lattice(const Matroid& m) {
    std::vector<FlatRecord> zs = cyclic_flats(m);
    // cyclic_flats sorts by (rank, size, mask); bottom is first, top is last.
    FlatRecord bottom = zs.front(), top = zs.back();
    std::vector<FlatRecord> mid;
    for (const FlatRecord& z : zs)
        if (!(z == bottom) && !(z == top)) mid.push_back(z);

    std::vector<CyclicFlatChain> out;
    std::vector<CyclicFlatChain::Entry> current{{bottom.elements, bottom.rank}};
    auto emit = [&]() {
        std::vector<CyclicFlatChain::Entry> entries = current;
        if (!(top == bottom)) entries.push_back({top.elements, top.rank});
        out.emplace_back(m.ground_size(), m.rank(), std::move(entries));
    };
    auto dfs = [&](auto&& self, std::size_t from) -> void {
        emit();
        for (std::size_t i = from; i < mid.size(); ++i) {
            if (!is_subset(current.back().elements, mid[i].elements)) continue;
            if (current.back().elements == mid[i].elements) continue;
            current.push_back({mid[i].elements, mid[i].rank});
            self(self, i + 1);
            current.pop_back();
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

CyclicFlatChain chain_of_schubert(const Matroid& m) {
    std::vector<FlatRecord> zs = cyclic_flats(m);
    std::vector<CyclicFlatChain::Entry> entries;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i > 0 && !is_subset(zs[i - 1].elements, zs[i].elements))
            throw InputError("cyclic flats do not form a chain");
        entries.push_back({zs[i].elements, zs[i].rank});
    }
    return CyclicFlatChain(m.ground_size(), m.rank(), std::move(entries));
}

int schubert_rank(const CyclicFlatChain& chain, Subset x) {
    int best = chain.ambient_r();
    for (const auto& e : chain.entries())
        best = std::min(best, e.rank + popcount(x & ~e.elements));
    return best;
}

int schubert_girth(const CyclicFlatChain& chain) { return chain.profile().girth(); }

Matroid schubert_from_chain(const CyclicFlatChain& chain) {
    int n = chain.ambient_n();
    int r = chain.ambient_r();
    std::vector<Subset> bases;
    for (Subset b : all_subsets_of_size(n, r)) {
        bool ok = true;
        for (const auto& e : chain.entries())
            if (popcount(b & e.elements) > e.rank) {
                ok = false;
                break;
            }
        if (ok) bases.push_back(b);
    }
    if (bases.empty()) throw InputError("empty basis family");
    Matroid out(n, r, std::move(bases), Matroid::Validate::no);
    if (validation_enabled()) {
        std::vector<FlatRecord> zs = cyclic_flats(out);
        bool same = zs.size() == chain.length();
        for (std::size_t i = 0; same && i < zs.size(); ++i)
            same = zs[i].elements == chain.entries()[i].elements && zs[i].rank == chain.entries()[i].rank;
        if (!same)
            throw InputError("chain is not realizable as a cyclic-flat lattice: " + chain.to_string());
    }
    return out;
}

}  // namespace momega
