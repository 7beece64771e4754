#include "momega/expansion.hpp"

#include <doctest.h>

#include <algorithm>

#include "momega/errors.hpp"
#include "test_helpers.hpp"

using namespace momega;
using namespace momega::test;

namespace {

SchubertProfile profile_of(int n, int r, std::vector<std::pair<int, int>> sig) {
    return SchubertProfile(n, r, std::move(sig));
}

}  // namespace

TEST_CASE("lambda coefficients of U12+U12") {
    Matroid uu = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
    auto lambdas = lambda_coefficients(uu);
    REQUIRE(lambdas.size() == 3);
    for (const auto& [chain, l] : lambdas) CHECK(l == (chain.length() == 3 ? 1 : -1));
}

TEST_CASE("schubert matroids expand to themselves") {
    for (const CyclicFlatChain& c : enumerate_labelled_chains(2, 4)) {
        LabelledExpansion e = expansion_labelled(schubert_from_chain(c));
        REQUIRE(e.coefficients.size() == 1);
        CHECK(e.coefficients[0].first == c);
        CHECK(e.coefficients[0].second == 1);
    }
}

TEST_CASE("symmetrized expansion of U12+U12") {
    Matroid uu = direct_sum(uniform_matroid(1, 2), uniform_matroid(1, 2));
    SymmetrizedExpansion e = expansion_symmetrized(uu);
    REQUIRE(e.coefficients.size() == 2);
    CHECK(e.coefficient(profile_of(4, 2, {{0, 0}, {2, 1}, {4, 2}})) == 2);
    CHECK(e.coefficient(profile_of(4, 2, {{0, 0}, {4, 2}})) == -1);
    CHECK(e.sum() == 1);
}

TEST_CASE("the two nonisomorphic rank-3 matroids share a symmetrized point") {
    // bases = all triples except {0,1,2} and {3,4,5} (resp. {2,3,4})
    auto buildWithout = [](Subset x, Subset y) {
        std::vector<Subset> bs;
        for (Subset b : all_subsets_of_size(6, 3))
            if (b != x && b != y) bs.push_back(b);
        return Matroid(6, 3, bs);
    };
    Matroid m = buildWithout(set_of({0, 1, 2}), set_of({3, 4, 5}));
    Matroid n = buildWithout(set_of({0, 1, 2}), set_of({2, 3, 4}));
    SymmetrizedExpansion em = expansion_symmetrized(m);
    SymmetrizedExpansion en = expansion_symmetrized(n);
    CHECK(em == en);
    REQUIRE(em.coefficients.size() == 2);
    CHECK(em.coefficient(profile_of(6, 3, {{0, 0}, {3, 2}, {6, 3}})) == 2);
    CHECK(em.coefficient(profile_of(6, 3, {{0, 0}, {6, 3}})) == -1);
}

TEST_CASE("profile enumeration counts") {
    auto p24 = enumerate_profiles(2, 4);
    REQUIRE(p24.size() == 6);
    // canonical order: shorter signatures first, then lexicographic
    CHECK(p24[0] == profile_of(4, 2, {{2, 0}}));
    CHECK(p24[1] == profile_of(4, 2, {{0, 0}, {3, 1}}));
    CHECK(p24[2] == profile_of(4, 2, {{0, 0}, {4, 2}}));
    CHECK(p24[3] == profile_of(4, 2, {{1, 0}, {3, 1}}));
    CHECK(p24[4] == profile_of(4, 2, {{1, 0}, {4, 2}}));
    CHECK(p24[5] == profile_of(4, 2, {{0, 0}, {2, 1}, {4, 2}}));

    for (int n = 0; n <= 8; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(enumerate_profiles(r, n).size() == binomial(n, r));

    CHECK(enumerate_profiles(3, 6, 3).size() == 4);  // paving: n - r + 1
    CHECK(enumerate_profiles(0, 5).size() == 1);
    for (int m = 1; m <= 3; ++m)
        CHECK(enumerate_profiles(3, 6, m).size() == binomial(6 - m + 1, 3 - m + 1));
}

TEST_CASE("labelled schubert counts") {
    CHECK(count_labelled_schuberts(2, 4) == 33);
    CHECK(binomial_eulerian_count(2, 4) == 33);
    CHECK(count_labelled_schuberts(1, 1) == 1);

    for (int n = 0; n <= 6; ++n)
        for (int r = 0; r <= n; ++r) {
            CHECK(count_labelled_schuberts(r, n) == binomial_eulerian_count(r, n));
            CHECK(static_cast<std::int64_t>(enumerate_labelled_chains(r, n).size()) ==
                  count_labelled_schuberts(r, n));
        }

    // paving filter: sum_{j=r}^{n} C(n,j)
    for (int n = 2; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) {
            std::int64_t expected = 0;
            for (int j = r; j <= n; ++j) expected += static_cast<std::int64_t>(binomial(n, j));
            CHECK(count_labelled_schuberts(r, n, r) == expected);
        }

    // the labelled ambient dimension from the paper's example: |S-bar_{3,6}| = 883
    CHECK(count_labelled_schuberts(3, 6) == 883);
}

TEST_CASE("loops force themselves into every support chain") {
    Matroid withLoop = direct_sum(uniform_matroid(0, 1), uniform_matroid(2, 3));
    LabelledExpansion e = expansion_labelled(withLoop);
    CHECK(!e.coefficients.empty());
    for (const auto& [chain, a] : e.coefficients) CHECK(contains(chain.entries().front().elements, 0));
}

TEST_CASE("eulerian numbers") {
    auto a = eulerian_numbers(6);
    CHECK(a[2][0] == 1);
    CHECK(a[3][1] == 4);
    CHECK(a[4][2] == 11);
    CHECK(a[5][2] == 66);
    CHECK(a[6][3] == 302);
}
