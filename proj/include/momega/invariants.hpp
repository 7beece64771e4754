#ifndef MOMEGA_INVARIANTS_HPP
#define MOMEGA_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "momega/matroid.hpp"

namespace momega {

/**
 * Tutte polynomial coefficients t[i][j] of x^i y^j, computed by the corank-nullity sum over
 * all 2^n subsets. Capped at n <= 16.
 */
std::vector<std::vector<std::int64_t>> tutte(const Matroid& m);

/** Crapo's beta invariant, the coefficient of x^1 y^0. Same cap as tutte() except that a
 *  rank <= 3 (or corank <= 3) flat-counting route extends it to n <= 24. */
std::int64_t beta_invariant(const Matroid& m);

/** T(x, y) evaluated from a coefficient table. */
std::int64_t tutte_evaluate(const std::vector<std::vector<std::int64_t>>& t, std::int64_t x,
                            std::int64_t y);

/**
 * #subsets by (rank, size). Exact for n <= 16 by table scan, and for rank <= 3 (any n <= 24)
 * by Moebius inversion over the flat lattice.
 */
std::vector<std::vector<std::int64_t>> subset_counts_by_rank_size(const Matroid& m);

struct InvariantVector {
    std::int64_t basesCount = 0;
    std::vector<std::int64_t> independentCounts;                      // I_0..I_r
    std::map<std::pair<int, int>, std::int64_t> flatsByRankSize;      // (rank, size) -> count
    std::map<int, std::int64_t> circuitsBySize;
    std::vector<std::int64_t> whitney;                                // W_0..W_r
    std::optional<std::vector<std::vector<std::int64_t>>> tutteCoefficients;  // n <= 16
    std::optional<std::int64_t> beta;
    int girth = 0;  // n+1 encodes a free matroid
    bool connected = false;
};

/**
 * All invariant fields. Full for n <= 16; for 16 < n <= 24 the matroid must have rank <= 3 or
 * corank <= 3, and the Tutte-derived fields stay empty (their documented cap).
 */
InvariantVector invariant_vector(const Matroid& m);

struct MatroidClasses {
    bool simple = false;
    bool loopless = false;
    bool paving = false;
    bool copaving = false;
    bool sparsePaving = false;
    bool connected = false;
    bool seriesParallel = false;
    std::optional<bool> modular;          // needs the flat lattice: n <= 16 or rank <= 3
    std::optional<bool> elementarySplit;  // minor search capped at n <= 12
};

MatroidClasses classify(const Matroid& m);

/** Exhaustive search for a minor isomorphic to U_{0,1} + U_{1,1} + U_{1,2}; n <= 12. */
bool has_split_excluded_minor(const Matroid& m);

/**
 * Cross-check characterization: the cyclic flats other than the empty set and the full ground
 * set are pairwise incomparable.
 */
bool cyclic_flats_pairwise_incomparable(const Matroid& m);

}  // namespace momega

#endif
