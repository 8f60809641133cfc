#include <doctest.h>

#include "waring/families.hpp"
#include "waring/strata.hpp"

using namespace waring;

TEST_CASE("monomial stratum dimensions") {
    CHECK(sigma_dim_monomial({1, 1, 1, 1, 1}, 2).dim == 1);
    CHECK(sigma_dim_monomial({2, 1, 1}, 2).dim == 0);
    // s = d: empty stratum
    CHECK(sigma_dim_monomial({2, 1, 1}, 4).dim == -1);
    CHECK(sigma_dim_monomial({3}, 3).dim == -1);
    CHECK_THROWS_AS(sigma_dim_monomial({2, 0, 1}, 1), PreconditionError);
}

TEST_CASE("determinant and permanent stratum formulas") {
    CHECK(sigma_dim_det(4, 2).dim == 6);
    CHECK(sigma_dim_det(2, 1).dim == -1);
    CHECK(sigma_dim_det(3, 1).dim == 4);
    CHECK(sigma_dim_perm_lb(4, 2).dim == 3);
    CHECK(sigma_dim_perm_lb(3, 1).dim == 2);
    CHECK(sigma_dim_perm_lb(4, 2).lower_bound_only);
    CHECK_THROWS_AS(sigma_dim_det(4, 4), PreconditionError);
}

TEST_CASE("coordinate-subspace search") {
    CHECK(sigma_dim_bruteforce(monomial_poly({2, 1, 1}), 1).dim == 1);
    CHECK(sigma_dim_bruteforce(cubic_fermat(), 1).dim == -1);
    CHECK(sigma_dim_bruteforce(two_squares_plus_cross_poly(), 1).dim == 2);
    CHECK_THROWS_AS(sigma_dim_bruteforce(Poly<Rational>(7, 2), 1), LimitError);
}

TEST_CASE("subspace search is exact on monomials") {
    // For a monomial the stratum is a union of coordinate subspaces, so the
    // two methods must agree.
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> b(n, 1);
        auto bump = [&]() {
            for (int i = 0; i < n; ++i) {
                if (++b[i] <= 4) return true;
                b[i] = 1;
            }
            return false;
        };
        do {
            int d = 0;
            for (int x : b) d += x;
            if (d > 7) continue;
            auto f = monomial_poly(b);
            for (int s = 0; s <= d; ++s) {
                int expected = sigma_dim_monomial(b, s).dim;
                int got = sigma_dim_bruteforce(f, s).dim;
                CHECK(expected == got);
            }
        } while (bump());
    }
}

TEST_CASE("stratum dimension is monotone in the order") {
    std::vector<std::vector<int>> samples = {{1, 1, 1, 1}, {3, 2, 1}, {4, 4}, {2, 2, 2, 1}};
    for (const auto& b : samples) {
        int d = 0;
        for (int x : b) d += x;
        int prev = sigma_dim_monomial(b, 0).dim;
        for (int s = 1; s <= d; ++s) {
            int cur = sigma_dim_monomial(b, s).dim;
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("singularity lower bounds from the structured families") {
    // x1 x2 x3 x4 at s = 2: catalecticant rank 6, stratum dim 0, bound 7.
    {
        std::vector<int> ranks = {4, 6, 4};  // s = 1, 2, 3
        auto st = sigma_dim_monomial({1, 1, 1, 1}, 2);
        auto contribs = sigma_lower_bound(ranks, {st});
        REQUIRE(contribs.size() == 1);
        CHECK(contribs[0].value == 7);
    }
    // det_3 at s = 1: 9 + 4 + 1 = 14.
    {
        std::vector<int> ranks = {9, 9};
        auto contribs = sigma_lower_bound(ranks, {sigma_dim_det(3, 1)});
        REQUIRE(contribs.size() == 1);
        CHECK(contribs[0].value == 14);
    }
    // per_3 at s = 1: 9 + 2 + 1 = 12, flagged as resting on a lower bound.
    {
        std::vector<int> ranks = {9, 9};
        auto contribs = sigma_lower_bound(ranks, {sigma_dim_perm_lb(3, 1)});
        REQUIRE(contribs.size() == 1);
        CHECK(contribs[0].value == 12);
        CHECK(contribs[0].provenance.find("lower bound") != std::string::npos);
    }
}

TEST_CASE("reducibility bounds") {
    CHECK(reducibility_bound(4, Factorization::Reducible).value == 6);       // 2m at m = 3
    CHECK(reducibility_bound(2, Factorization::RepeatedFactor).value == 3);  // x^2 y
    CHECK(reducibility_bound(5, Factorization::Reducible).value == 8);
}
