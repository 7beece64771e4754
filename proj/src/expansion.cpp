#include "momega/expansion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "momega/errors.hpp"

namespace momega {

std::int64_t LabelledExpansion::coefficient(const CyclicFlatChain& c) const {
    for (const auto& [chain, a] : coefficients)
        if (chain == c) return a;
    return 0;
}

std::int64_t LabelledExpansion::sum() const {
    std::int64_t s = 0;
    for (const auto& [chain, a] : coefficients) s += a;
    return s;
}

std::int64_t SymmetrizedExpansion::coefficient(const SchubertProfile& p) const {
    for (const auto& [profile, a] : coefficients)
        if (profile == p) return a;
    return 0;
}

std::int64_t SymmetrizedExpansion::sum() const {
    std::int64_t s = 0;
    for (const auto& [profile, a] : coefficients) s += a;
    return s;
}

namespace {

// Moebius function of the chain-containment poset extended by an artificial top.
std::int64_t moebius_to_top(const std::vector<CyclicFlatChain>& chains, std::size_t from) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < chains.size(); ++j)
        if (chains[from].is_subchain_of(chains[j])) above.push_back(j);
    // mu(C, D) within the containment interval, computed recursively.
    std::map<std::size_t, std::int64_t> mu;
    for (std::size_t j : above) {
        std::int64_t s = 0;
        for (std::size_t k : above)
            if (k != j && chains[k].is_subchain_of(chains[j])) s += mu.at(k);
        mu[j] = (j == from) ? 1 : -s;
    }
    std::int64_t total = 0;
    for (std::size_t j : above) total += mu.at(j);
    return -total;  // mu(C, top) = -sum_{C <= D < top} mu(C, D)
}

}  // namespace

std::vector<std::pair<CyclicFlatChain, std::int64_t>> lambda_coefficients(const Matroid& m) {
    std::vector<CyclicFlatChain> chains = chain_lattice(m);
    std::vector<std::pair<CyclicFlatChain, std::int64_t>> out;
    out.reserve(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        std::int64_t lambda = 0;
        for (std::size_t j = 0; j < chains.size(); ++j) {
            if (!chains[i].is_subchain_of(chains[j])) continue;
            std::size_t extra = chains[j].length() - chains[i].length();
            lambda += (extra % 2 == 0) ? 1 : -1;
        }
        if (validation_enabled()) {
            std::int64_t viaMoebius = -moebius_to_top(chains, i);
            if (viaMoebius != lambda)
                throw CheckError("lambda mismatch, closed form " + std::to_string(lambda) +
                                 " vs Moebius " + std::to_string(viaMoebius) + " on chain " +
                                 chains[i].to_string());
        }
        out.emplace_back(chains[i], lambda);
    }
    return out;
}

LabelledExpansion expansion_labelled(const Matroid& m) {
    LabelledExpansion out{m.ground_size(), m.rank(), {}};
    for (auto& [chain, lambda] : lambda_coefficients(m))
        if (lambda != 0) out.coefficients.emplace_back(std::move(chain), lambda);
    if (out.sum() != 1)
        throw CheckError("expansion coefficients sum to " + std::to_string(out.sum()));
    return out;
}

namespace {

SymmetrizedExpansion symmetrize(const LabelledExpansion& e) {
    std::map<SchubertProfile, std::int64_t> grouped;
    for (const auto& [chain, a] : e.coefficients) grouped[chain.profile()] += a;
    SymmetrizedExpansion out{e.n, e.r, {}};
    for (auto& [profile, a] : grouped)
        if (a != 0) out.coefficients.emplace_back(profile, a);
    return out;
}

}  // namespace

SymmetrizedExpansion expansion_symmetrized(const Matroid& m) {
    SymmetrizedExpansion out = symmetrize(expansion_labelled(m));
    if (validation_enabled() && m.ground_size() > 1) {
        std::mt19937 gen(0x5eed + static_cast<unsigned>(m.ground_size()));
        std::vector<int> perm(m.ground_size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        SymmetrizedExpansion relabelled = symmetrize(expansion_labelled(relabel(m, perm)));
        if (!(relabelled == out))
            throw CheckError("symmetrized expansion is not relabelling-invariant");
    }
    if (out.sum() != 1)
        throw CheckError("symmetrized coefficients sum to " + std::to_string(out.sum()));
    return out;
}

std::vector<SchubertProfile> enumerate_profiles(int r, int n, std::optional<int> minGirth) {
    if (r < 0 || r > n) throw InputError("bad (r, n)");
    std::vector<SchubertProfile> out;
    std::vector<std::pair<int, int>> sig;
    int corank = n - r;
    auto dfs = [&](auto&& self) -> void {
        auto [s, rho] = sig.back();
        if (s - rho == corank) {
            out.emplace_back(n, r, sig);
            return;  // reached the top entry
        }
        for (int rho2 = rho + 1; rho2 <= r; ++rho2)
            for (int s2 = s + (rho2 - rho) + 1; s2 <= n && s2 - rho2 <= corank; ++s2) {
                sig.emplace_back(s2, rho2);
                self(self);
                sig.pop_back();
            }
    };
    for (int s0 = 0; s0 <= corank; ++s0) {
        sig.assign(1, {s0, 0});
        dfs(dfs);
    }
    if (minGirth)
        std::erase_if(out, [&](const SchubertProfile& p) { return p.girth() < *minGirth; });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CyclicFlatChain> enumerate_labelled_chains(int r, int n, std::optional<int> minGirth) {
    std::vector<CyclicFlatChain> out;
    for (const SchubertProfile& p : enumerate_profiles(r, n, minGirth)) {
        const auto& sig = p.signature();
        std::vector<CyclicFlatChain::Entry> entries;
        auto dfs = [&](auto&& self, std::size_t level) -> void {
            if (level == sig.size()) {
                out.emplace_back(n, r, entries);
                return;
            }
            Subset below = level ? entries.back().elements : 0;
            int add = sig[level].first - (level ? sig[level - 1].first : 0);
            std::vector<int> pool = elements(full_set(n) & ~below);
            for (Subset pick : all_subsets_of_size(static_cast<int>(pool.size()), add)) {
                Subset grown = below;
                for (int i = 0; i < static_cast<int>(pool.size()); ++i)
                    if (contains(pick, i)) grown = with(grown, pool[i]);
                entries.push_back({grown, sig[level].second});
                self(self, level + 1);
                entries.pop_back();
            }
        };
        dfs(dfs, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::int64_t multinomial(int n, const std::vector<int>& parts) {
    std::int64_t result = 1;
    int left = n;
    for (int p : parts) {
        result *= static_cast<std::int64_t>(binomial(left, p));
        left -= p;
    }
    return result;
}

}  // namespace

std::int64_t count_labelled_schuberts(int r, int n, std::optional<int> minGirth) {
    if (n > 12) throw SizeCapError("labelled Schubert count size cap (n <= 12)");
    std::int64_t total = 0;
    for (const SchubertProfile& p : enumerate_profiles(r, n, minGirth)) {
        std::vector<int> parts;
        int prev = 0;
        for (auto [s, rho] : p.signature()) {
            parts.push_back(s - prev);
            prev = s;
        }
        total += multinomial(n, parts);  // the n - s_k coloops take the remaining slots
    }
    return total;
}

std::vector<std::vector<std::int64_t>> eulerian_numbers(int mMax) {
    std::vector<std::vector<std::int64_t>> a(mMax + 1, std::vector<std::int64_t>(mMax + 1, 0));
    a[0][0] = 1;
    for (int m = 1; m <= mMax; ++m)
        for (int i = 0; i < m; ++i) {
            std::int64_t fromSame = a[m - 1][i];
            std::int64_t fromPrev = (i > 0) ? a[m - 1][i - 1] : 0;
            a[m][i] = (i + 1) * fromSame + (m - i) * fromPrev;
        }
    return a;
}

std::int64_t binomial_eulerian_count(int r, int n) {
    auto a = eulerian_numbers(n);
    std::int64_t total = 0;
    for (int j = 0; j <= n - r; ++j)
        total += static_cast<std::int64_t>(binomial(n, r + j)) * a[r + j][j];
    return total;
}

}  // namespace momega
