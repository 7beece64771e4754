#ifndef MOMEGA_SUBSET_HPP
#define MOMEGA_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace momega {

// Subsets of a ground set {0, ..., n-1}, n <= 24, as bitmasks: bit e set <=> element e present.
using Subset = std::uint32_t;

inline constexpr int kMaxGroundSet = 24;

inline int popcount(Subset s) { return std::popcount(s); }

inline Subset full_set(int n) { return (n == 32) ? ~Subset{0} : ((Subset{1} << n) - 1); }

inline bool contains(Subset s, int e) { return (s >> e) & 1u; }

inline Subset with(Subset s, int e) { return s | (Subset{1} << e); }

inline Subset without(Subset s, int e) { return s & ~(Subset{1} << e); }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

/** Elements of `s` in ascending order. */
inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    while (s) {
        int e = std::countr_zero(s);
        out.push_back(e);
        s &= s - 1;
    }
    return out;
}

/** Ascending comma-separated element list, e.g. "0,2,3"; empty set renders as "". */
inline std::string subset_to_string(Subset s) {
    std::string out;
    bool first = true;
    while (s) {
        int e = std::countr_zero(s);
        s &= s - 1;
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out;
}

/**
 * Next k-subset mask in ascending numeric order (Gosper's hack).
 * Numeric mask order coincides with revlex order on k-subsets:
 * S precedes T iff max(S symdiff T) lies in T.
 */
inline Subset next_subset_same_size(Subset s) {
    Subset c = s & (~s + 1);
    Subset r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

/** All k-subsets of {0,...,n-1} in revlex (= ascending mask) order. */
inline std::vector<Subset> all_subsets_of_size(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    Subset s = full_set(k);
    Subset limit = Subset{1} << n;
    while (s < limit) {
        out.push_back(s);
        s = next_subset_same_size(s);
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / i;
    return b;
}

}  // namespace momega

#endif
