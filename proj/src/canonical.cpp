#include "momega/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "momega/errors.hpp"

namespace momega {

namespace {

std::string key_prefix(const Matroid& m) {
    return "n" + std::to_string(m.ground_size()) + "r" + std::to_string(m.rank()) + ":";
}

std::string string_under_permutation(const Matroid& m, const std::vector<int>& slotToElem) {
    int n = m.ground_size();
    int r = m.rank();
    std::string out;
    for (Subset t : all_subsets_of_size(n, r)) {
        Subset pre = 0;
        for (int slot = 0; slot < n; ++slot)
            if (contains(t, slot)) pre = with(pre, slotToElem[slot]);
        out += m.is_basis(pre) ? '*' : '0';
    }
    return out;
}

/**
 * Minimizes the revlex string over all slot assignments by branch and bound. Positions are
 * indexed by r-subsets in ascending mask order, so the positions over slots 0..d are a prefix
 * of the string; branches whose prefix exceeds the incumbent are pruned, branches strictly
 * below it run to a leaf and replace it there.
 */
class Canonicalizer {
  public:
    explicit Canonicalizer(const Matroid& m) : m_(m), n_(m.ground_size()), r_(m.rank()) {}

    std::string run() {
        std::vector<int> identity(n_);
        std::iota(identity.begin(), identity.end(), 0);
        best_ = string_under_permutation(m_, identity);

        // a second incumbent seed: high basis-degree elements first
        std::vector<int> degree(n_, 0);
        for (Subset b : m_.bases())
            for (int e : elements(b)) ++degree[e];
        std::vector<int> byDegree = identity;
        std::stable_sort(byDegree.begin(), byDegree.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
        best_ = std::min(best_, string_under_permutation(m_, byDegree));

        used_.assign(n_, false);
        assignment_.assign(n_, -1);
        current_.clear();
        descend(0, false);
        return best_;
    }

  private:
    void descend(int depth, bool lessAlready) {
        if (depth == n_) {
            // the incumbent may have changed below an ancestor whose compare-state predates
            // it, so never adopt without a full comparison
            if (lessAlready && current_ < best_) best_ = current_;
            return;
        }
        std::size_t prefixLen = current_.size();
        for (int e = 0; e < n_; ++e) {
            if (used_[e]) continue;
            assignment_[depth] = e;
            used_[e] = true;
            append_chunk(depth);
            bool prune = false;
            bool childLess = lessAlready;
            if (!lessAlready) {
                for (std::size_t i = prefixLen; i < current_.size(); ++i) {
                    if (current_[i] < best_[i]) {
                        childLess = true;
                        break;
                    }
                    if (current_[i] > best_[i]) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) descend(depth + 1, childLess);
            current_.resize(prefixLen);
            used_[e] = false;
        }
        assignment_[depth] = -1;
    }

    // Fresh positions at this depth: r-subsets of slots 0..depth that contain slot `depth`.
    void append_chunk(int depth) {
        if (depth + 1 < r_) return;
        for (Subset q : all_subsets_of_size(depth, r_ - 1)) {
            Subset pre = with(Subset{0}, assignment_[depth]);
            for (int slot = 0; slot < depth; ++slot)
                if (contains(q, slot)) pre = with(pre, assignment_[slot]);
            current_ += m_.is_basis(pre) ? '*' : '0';
        }
    }

    const Matroid& m_;
    int n_, r_;
    std::string best_;
    std::string current_;
    std::vector<int> assignment_;
    std::vector<bool> used_;
};

}  // namespace

std::string revlex_string(const Matroid& m) {
    std::string out;
    for (Subset t : all_subsets_of_size(m.ground_size(), m.rank())) out += m.is_basis(t) ? '*' : '0';
    return out;
}

std::string canonical_key(const Matroid& m) {
    int n = m.ground_size();
    int r = m.rank();
    if (r == 0 || r == n) return key_prefix(m) + "*";
    if (r == 1) {
        int k = popcount(loops(m));
        return key_prefix(m) + std::string(n - k, '*') + std::string(k, '0');
    }
    if (r == n - 1) {
        int k = popcount(coloops(m));
        return key_prefix(m) + std::string(n - k, '*') + std::string(k, '0');
    }
    if (static_cast<std::uint64_t>(m.bases().size()) == binomial(n, r))
        return key_prefix(m) + std::string(m.bases().size(), '*');
    if (n > 10) throw SizeCapError("canonicalization size cap");
    return key_prefix(m) + Canonicalizer(m).run();
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
    if (a.ground_size() != b.ground_size() || a.rank() != b.rank()) return false;
    if (a.bases().size() != b.bases().size()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace momega
