#ifndef MOMEGA_EXPANSION_HPP
#define MOMEGA_EXPANSION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "momega/chains.hpp"

namespace momega {

/**
 * The unique expansion of a base-polytope indicator function into labelled Schubert
 * indicators: nonzero integer coefficients keyed by cyclic-flat chains, in canonical chain
 * order. Coefficients always sum to 1.
 */
struct LabelledExpansion {
    int n = 0, r = 0;
    std::vector<std::pair<CyclicFlatChain, std::int64_t>> coefficients;

    std::int64_t coefficient(const CyclicFlatChain& c) const;
    std::int64_t sum() const;
};

/** The same expansion with isomorphic Schubert matroids grouped: keyed by profiles. */
struct SymmetrizedExpansion {
    int n = 0, r = 0;
    std::vector<std::pair<SchubertProfile, std::int64_t>> coefficients;

    std::int64_t coefficient(const SchubertProfile& p) const;
    std::int64_t sum() const;
    bool operator==(const SymmetrizedExpansion&) const = default;
};

/**
 * lambda_C for every chain of the cyclic chain lattice of M, via the closed alternating sum
 * lambda_C = sum_{D >= C} (-1)^{|D|-|C|} over chains D. In validation mode the recursive
 * Moebius computation on the chain lattice (with artificial top) is cross-asserted. Zero
 * coefficients are kept here; expansions drop them.
 */
std::vector<std::pair<CyclicFlatChain, std::int64_t>> lambda_coefficients(const Matroid& m);

LabelledExpansion expansion_labelled(const Matroid& m);

/**
 * Labelled coefficients grouped by profile. In validation mode the result is asserted
 * invariant under a pseudorandom relabelling of M.
 */
SymmetrizedExpansion expansion_symmetrized(const Matroid& m);

/**
 * All profiles for ambient (r, n) in canonical order; exactly C(n, r) of them. With a girth
 * filter only profiles of girth >= minGirth are kept, C(n-m+1, r-m+1) of them for m <= r.
 */
std::vector<SchubertProfile> enumerate_profiles(int r, int n, std::optional<int> minGirth = {});

/** Every labelled chain (= labelled Schubert matroid) for ambient (r, n), canonical order. */
std::vector<CyclicFlatChain> enumerate_labelled_chains(int r, int n,
                                                       std::optional<int> minGirth = {});

/**
 * |labelled Schubert matroids| for (r, n), by summing multinomials over enumerated profiles.
 * Without a filter this equals the binomial Eulerian number sum_j C(n, r+j) A_{r+j,j}.
 * Capped at n <= 12.
 */
std::int64_t count_labelled_schuberts(int r, int n, std::optional<int> minGirth = {});

/** Eulerian numbers A_{m,i} (#permutations of m with i descents) for 0 <= i, m <= mMax. */
std::vector<std::vector<std::int64_t>> eulerian_numbers(int mMax);

/** sum_j C(n, r+j) A_{r+j,j}. */
std::int64_t binomial_eulerian_count(int r, int n);

}  // namespace momega

#endif
