#ifndef MOMEGA_MATROID_HPP
#define MOMEGA_MATROID_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "momega/subset.hpp"

namespace momega {

/**
 * A matroid on ground set {0,...,n-1} given by its list of bases.
 *
 * Immutable after construction; all operations on it are pure functions, so values can be
 * shared freely across threads.
 */
class Matroid {
  public:
    enum class Validate { yes, no };

    /**
     * `bases` are r-element subsets of {0,...,n-1}. With Validate::yes the basis-exchange
     * axiom is verified and an InputError is thrown if it fails.
     */
    Matroid(int n, int r, std::vector<Subset> bases, Validate v = Validate::yes);

    int ground_size() const { return n_; }
    int rank() const { return r_; }
    Subset ground_set() const { return full_set(n_); }

    /** Sorted ascending (= revlex order). */
    const std::vector<Subset>& bases() const { return bases_; }

    bool is_basis(Subset s) const;

    bool operator==(const Matroid& other) const = default;

  private:
    int n_ = 0;
    int r_ = 0;
    std::vector<Subset> bases_;
};

struct FlatRecord {
    Subset elements = 0;
    int rank = 0;
    bool operator==(const FlatRecord&) const = default;
};

/** rank(S) = max |B ∩ S| over bases B. */
int rank(const Matroid& m, Subset s);

/** closure(S) = {e : rank(S ∪ {e}) = rank(S)} ∪ S. */
Subset closure(const Matroid& m, Subset s);

/**
 * Precomputed rank of every subset, for bulk enumeration. Memory 2^n bytes; callers enforce
 * their own documented caps (Tutte at n <= 16, etc.); hard limit n <= 20 here.
 */
class RankTable {
  public:
    explicit RankTable(const Matroid& m);
    int n() const { return n_; }
    int operator[](Subset s) const { return ranks_[s]; }
    bool independent(Subset s) const { return ranks_[s] == popcount(s); }
    Subset closure(Subset s) const;

  private:
    int n_;
    std::vector<std::uint8_t> ranks_;
};

/** Inclusion-minimal dependent sets plus the girth; a free matroid reports girth n+1. */
std::pair<std::vector<Subset>, int> circuits_and_girth(const Matroid& m);

int girth(const Matroid& m);

/** All flats with their ranks, sorted by (rank, size, mask). */
std::vector<FlatRecord> flats(const Matroid& m);

/**
 * Flats F with no coloop in M|F, i.e. rank(F \ {e}) = rank(F) for every e in F. Always
 * includes the set of loops (bottom) and the ground set minus coloops (top). Sorted by
 * (rank, size, mask).
 */
std::vector<FlatRecord> cyclic_flats(const Matroid& m);

Subset loops(const Matroid& m);
Subset coloops(const Matroid& m);

Matroid dual(const Matroid& m);

/** Independent sets are those of M with size <= r-1. Throws InputError("rank underflow") at r = 0. */
Matroid truncation(const Matroid& m);

/** Ground sets concatenated: b's elements are shifted up by a.ground_size(). */
Matroid direct_sum(const Matroid& a, const Matroid& b);

/**
 * Delete `deleteSet`, contract `contractSet` (disjoint), relabel the remaining elements in
 * ascending order to 0..n'-1.
 */
Matroid minor(const Matroid& m, Subset deleteSet, Subset contractSet);

/** M restricted to S, relabelled onto 0..|S|-1. */
Matroid restriction(const Matroid& m, Subset s);

/** perm[old] = new label; perm must be a permutation of 0..n-1. */
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

/**
 * Partition of the ground set into connected components (two elements are connected when a
 * circuit contains both; loops and coloops are singleton components).
 */
std::vector<Subset> connected_components(const Matroid& m);

/** No proper separator S with rank(S) + rank(E\S) = r; matroids on <= 1 element are connected. */
bool is_connected(const Matroid& m);

/** Basis-exchange axiom over all ordered basis pairs. On failure *why names a witness. */
bool exchange_property_holds(const Matroid& m, std::string* why = nullptr);

Matroid uniform_matroid(int r, int n);

}  // namespace momega

#endif
