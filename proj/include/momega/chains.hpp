#ifndef MOMEGA_CHAINS_HPP
#define MOMEGA_CHAINS_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "momega/matroid.hpp"

namespace momega {

/**
 * The label-free signature of a cyclic-flat chain: the (size, rank) pairs of its entries,
 * within an ambient (n, r). Two chains index the same symmetrized Schubert coordinate exactly
 * when they have the same signature.
 */
class SchubertProfile {
  public:
    /** Validates the signature against the chain axioms; throws InputError when unrealizable. */
    SchubertProfile(int n, int r, std::vector<std::pair<int, int>> signature);

    int ambient_n() const { return n_; }
    int ambient_r() const { return r_; }
    const std::vector<std::pair<int, int>>& signature() const { return sig_; }

    /** Girth of the Schubert matroids with this signature; n+1 encodes a free matroid. */
    int girth() const;

    /** Signature of the dual chain in ambient (n, n-r). */
    SchubertProfile dual() const;

    /** "s0:r0|s1:r1|..." */
    std::string to_string() const;

    /** Canonical order: shorter signatures first, then lexicographic on (size, rank) pairs. */
    bool operator<(const SchubertProfile& o) const;
    bool operator==(const SchubertProfile& o) const = default;

  private:
    int n_, r_;
    std::vector<std::pair<int, int>> sig_;
};

/**
 * A chain of cyclic flats (with their ranks) in an ambient (n, r); the index of a labelled
 * Schubert matroid. Entries are strictly increasing by inclusion; the constructor enforces the
 * axioms a chain of cyclic flats of a rank-r matroid on n elements must satisfy (rank 0 at the
 * bottom, rank increments positive and below the size increments, top nullity n-r).
 */
class CyclicFlatChain {
  public:
    struct Entry {
        Subset elements = 0;
        int rank = 0;
        bool operator==(const Entry&) const = default;
    };

    CyclicFlatChain(int n, int r, std::vector<Entry> entries);

    int ambient_n() const { return n_; }
    int ambient_r() const { return r_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }

    SchubertProfile profile() const;

    /** True when every entry of this chain appears in `super`. */
    bool is_subchain_of(const CyclicFlatChain& super) const;

    /** "{}:0;{0,1}:1;{0,1,2,3}:2" */
    std::string to_string() const;

    /** Canonical order: profile order first, then lexicographic on the element masks. */
    bool operator<(const CyclicFlatChain& o) const;
    bool operator==(const CyclicFlatChain& o) const = default;

  private:
    int n_, r_;
    std::vector<Entry> entries_;
};

/**
 * All chains of the lattice of cyclic flats of M that contain its minimal and maximal
 * elements, in canonical order.
 */
std::vector<CyclicFlatChain> chain_lattice(const Matroid& m);

/** The chain of cyclic flats of M itself (requires them to form a chain). */
CyclicFlatChain chain_of_schubert(const Matroid& m);

/**
 * The unique Schubert matroid whose lattice of cyclic flats equals the chain: bases are the
 * r-subsets B with |B ∩ Z_i| <= rank_i for every entry. In validation mode the cyclic flats of
 * the result are checked against the chain.
 */
Matroid schubert_from_chain(const CyclicFlatChain& chain);

/** Rank in schubert_from_chain(chain) of an arbitrary subset: min(r, min_i(rank_i + |X\Z_i|)). */
int schubert_rank(const CyclicFlatChain& chain, Subset x);

/** Evaluated on the profile alone (girth and dual are label-free). */
int schubert_girth(const CyclicFlatChain& chain);

/** Global validation toggle: cross-checks and construction assertions. Defaults to on. */
bool validation_enabled();
void set_validation_enabled(bool on);

}  // namespace momega

#endif
