#ifndef MOMEGA_CANONICAL_HPP
#define MOMEGA_CANONICAL_HPP

#include <string>

#include "momega/matroid.hpp"

namespace momega {

/**
 * Canonical isomorphism key: "n<n>r<r>:" followed by the lexicographically minimal revlex
 * basis string ('*' basis, '0' non-basis; r-subsets in revlex order) over all ground-set
 * permutations. Two matroids are isomorphic iff their keys are equal.
 *
 * Branch-and-bound over slot assignments with prefix pruning; closed forms cover r <= 1 and
 * r >= n-1 for any n <= 24, otherwise n <= 10.
 */
std::string canonical_key(const Matroid& m);

bool is_isomorphic(const Matroid& a, const Matroid& b);

/** Revlex basis string of m under the identity labelling. */
std::string revlex_string(const Matroid& m);

}  // namespace momega

#endif
