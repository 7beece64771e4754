#ifndef MOMEGA_TEST_HELPERS_HPP
#define MOMEGA_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "momega/matroid.hpp"

namespace momega::test {

inline Subset set_of(std::initializer_list<int> elems) {
    Subset s = 0;
    for (int e : elems) s = with(s, e);
    return s;
}

/** Bases given as element lists, e.g. {{0,2},{0,3},...}. */
inline Matroid matroid_of(int n, int r, std::initializer_list<std::initializer_list<int>> bases) {
    std::vector<Subset> bs;
    for (auto b : bases) bs.push_back(set_of(b));
    return Matroid(n, r, bs);
}

/** The 5-basis minimal matroid on {0..3}: every pair except {0,1}. */
inline Matroid t24() {
    return matroid_of(4, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

/** Naive rank straight from the definition, independent of the library path. */
inline int naive_rank(const std::vector<Subset>& bases, Subset s) {
    int best = 0;
    for (Subset b : bases) best = std::max(best, popcount(b & s));
    return best;
}

}  // namespace momega::test

#endif
