#include "momega/chains.hpp"

#include <doctest.h>

#include <algorithm>

#include "momega/errors.hpp"
#include "test_helpers.hpp"

using namespace momega;
using namespace momega::test;

namespace {

CyclicFlatChain uniform_chain(int r, int n) {
    if (r == 0) return CyclicFlatChain(n, 0, {{full_set(n), 0}});
    if (r == n) return CyclicFlatChain(n, n, {{0, 0}});
    return CyclicFlatChain(n, r, {{0, 0}, {full_set(n), r}});
}

CyclicFlatChain t24_chain() {
    return CyclicFlatChain(4, 2, {{0, 0}, {set_of({0, 1}), 1}, {full_set(4), 2}});
}

}  // namespace

TEST_CASE("chain validation") {
    CHECK_NOTHROW(t24_chain());
    // wrong top nullity
    CHECK_THROWS_AS(CyclicFlatChain(4, 2, {{0, 0}, {full_set(4), 1}}), InputError);
    // rank increment must stay below the size increment
    CHECK_THROWS_AS(CyclicFlatChain(4, 2, {{0, 0}, {set_of({0}), 1}, {full_set(4), 2}}), InputError);
    // ranks strictly increase
    CHECK_THROWS_AS(
        CyclicFlatChain(6, 2, {{0, 0}, {set_of({0, 1}), 1}, {set_of({0, 1, 2, 3}), 1}, {full_set(6), 2}}),
        InputError);
    // entries nested
    CHECK_THROWS_AS(CyclicFlatChain(6, 3, {{set_of({0, 1}), 0}, {set_of({2, 3, 4}), 1}}), InputError);
    // bottom rank 0
    CHECK_THROWS_AS(CyclicFlatChain(4, 2, {{set_of({0, 1}), 1}, {full_set(4), 2}}), InputError);
    CHECK_THROWS_AS(CyclicFlatChain(4, 2, {}), InputError);
}

TEST_CASE("schubert matroids from chains") {
    CHECK(schubert_from_chain(uniform_chain(2, 4)) == uniform_matroid(2, 4));
    CHECK(schubert_from_chain(uniform_chain(0, 3)) == uniform_matroid(0, 3));
    CHECK(schubert_from_chain(uniform_chain(3, 3)) == uniform_matroid(3, 3));

    Matroid t = schubert_from_chain(t24_chain());
    CHECK(t == t24());
    // oracle: direct constraint filter over all 2-subsets
    std::vector<Subset> expected;
    for (Subset b : all_subsets_of_size(4, 2))
        if (popcount(b & set_of({0, 1})) <= 1) expected.push_back(b);
    CHECK(t.bases() == expected);

    // rank-0 nonempty bottom forces loops
    Matroid withLoop = schubert_from_chain(CyclicFlatChain(4, 2, {{set_of({0}), 0}, {full_set(4), 2}}));
    CHECK(loops(withLoop) == set_of({0}));
    CHECK(restriction(withLoop, set_of({1, 2, 3})) == uniform_matroid(2, 3));
}

TEST_CASE("schubert rank formula matches the constructed matroid") {
    for (const CyclicFlatChain& c : {t24_chain(), uniform_chain(2, 4),
                                     CyclicFlatChain(4, 2, {{set_of({0}), 0}, {full_set(4), 2}}),
                                     CyclicFlatChain(5, 2, {{0, 0}, {set_of({0, 1, 2}), 1}, {full_set(5), 2}})}) {
        Matroid m = schubert_from_chain(c);
        for (Subset s = 0; s < (Subset{1} << m.ground_size()); ++s)
            CHECK(schubert_rank(c, s) == naive_rank(m.bases(), s));
    }
}

TEST_CASE("chain lattice") {
    auto one = chain_lattice(uniform_matroid(2, 4));
    CHECK(one.size() == 1);
    CHECK(one[0] == uniform_chain(2, 4));

    Matroid uu = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
    auto three = chain_lattice(uu);
    REQUIRE(three.size() == 3);
    // canonical order puts the short chain first
    CHECK(three[0] == uniform_chain(2, 4));
    CHECK(three[1] == CyclicFlatChain(4, 2, {{0, 0}, {set_of({0, 1}), 1}, {full_set(4), 2}}));
    CHECK(three[2] == CyclicFlatChain(4, 2, {{0, 0}, {set_of({2, 3}), 1}, {full_set(4), 2}}));

    CHECK(chain_lattice(t24()).size() == 2);

    // single cyclic flat: free matroid plus loops
    Matroid freeLoops = direct_sum(uniform_matroid(2, 2), uniform_matroid(0, 2));
    auto single = chain_lattice(freeLoops);
    REQUIRE(single.size() == 1);
    CHECK(single[0].length() == 1);
}

TEST_CASE("girths of the six rank-2 Schubert matroids on 4 elements") {
    // girth is determined by the initial run of the profile; paper lists 1,1,1,2,2,3
    std::vector<int> girths;
    for (const CyclicFlatChain& c : {
             CyclicFlatChain(4, 2, {{set_of({0, 1}), 0}}),
             CyclicFlatChain(4, 2, {{set_of({0}), 0}, {set_of({0, 1, 2}), 1}}),
             CyclicFlatChain(4, 2, {{set_of({0}), 0}, {full_set(4), 2}}),
             CyclicFlatChain(4, 2, {{0, 0}, {set_of({0, 1, 2}), 1}}),
             t24_chain(),
             uniform_chain(2, 4),
         }) {
        CHECK(schubert_girth(c) == girth(schubert_from_chain(c)));
        girths.push_back(schubert_girth(c));
    }
    std::sort(girths.begin(), girths.end());
    CHECK(girths == std::vector<int>{1, 1, 1, 2, 2, 3});
}

TEST_CASE("profile duality") {
    SchubertProfile hook(4, 2, {{0, 0}, {2, 1}, {4, 2}});
    SchubertProfile dualHook = hook.dual();
    CHECK(dualHook.ambient_r() == 2);
    // T24 is self-dual
    CHECK(dualHook == hook);

    SchubertProfile loopy(4, 2, {{1, 0}, {3, 1}});
    SchubertProfile d = loopy.dual();
    CHECK(d.signature() == std::vector<std::pair<int, int>>{{1, 0}, {3, 1}});
    // duality is an involution
    CHECK(d.dual() == loopy);
    // a parallel pair dualizes to a 4-point line
    CHECK(SchubertProfile(6, 3, {{0, 0}, {2, 1}, {6, 3}}).dual().signature() ==
          std::vector<std::pair<int, int>>{{0, 0}, {4, 2}, {6, 3}});
    // the one-nonbasis sparse paving profile is self-dual
    CHECK(SchubertProfile(6, 3, {{0, 0}, {3, 2}, {6, 3}}).dual().signature() ==
          std::vector<std::pair<int, int>>{{0, 0}, {3, 2}, {6, 3}});
}

TEST_CASE("chain of a schubert matroid round-trips") {
    for (const CyclicFlatChain& c :
         {t24_chain(), uniform_chain(2, 4), CyclicFlatChain(4, 2, {{set_of({0}), 0}, {full_set(4), 2}})}) {
        CHECK(chain_of_schubert(schubert_from_chain(c)) == c);
    }
    CHECK_THROWS_AS(chain_of_schubert(direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2))),
                    InputError);
}
