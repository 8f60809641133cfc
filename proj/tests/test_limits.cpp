#include <doctest.h>

#include <algorithm>

#include "waring/bounds.hpp"
#include "waring/families.hpp"
#include "waring/limits.hpp"

using namespace waring;

namespace {

Poly<Rational> capped_monomial(int nvars, int d, const std::vector<int>& tail,
                               const std::vector<int>& a) {
    int sum = 0;
    for (int x : a) sum += x;
    std::vector<int> e;
    e.push_back(d - sum);
    for (int x : a) e.push_back(x);
    return Poly<Rational>::monomial(nvars, Monomial(std::move(e)), Rational::one());
}

bool plane_equals_capped_span(const LimitPlane& plane, int d, const std::vector<int>& tail) {
    std::vector<int> a(tail.size(), 0);
    int count = 0;
    while (true) {
        if (!contains(plane, capped_monomial(plane.nvars, d, tail, a))) return false;
        ++count;
        size_t pos = tail.size();
        while (pos > 0 && a[pos - 1] == tail[pos - 1]) a[--pos] = 0;
        if (pos == 0) break;
        ++a[pos - 1];
    }
    return count == static_cast<int>(plane.basis.size());
}

}  // namespace

TEST_CASE("curve bundles for monomials") {
    auto f1 = monomial_family({1}, 3);
    CHECK(f1.curves.size() == 2);

    auto f2 = monomial_family({1, 1}, 4);
    CHECK(f2.curves.size() == 4);
    // the (1,1) curve carries both t x1 and t^2 x2
    const auto& last = f2.curves.back();
    CHECK(last[1].degree() == 1);
    CHECK(last[2].degree() == 2);

    std::vector<std::vector<Rational>> lam = {{Rational(0), Rational(1), Rational(2)}};
    auto f3 = monomial_family({2}, 4, &lam);
    CHECK(f3.curves.size() == 3);

    std::vector<std::vector<Rational>> bad = {{Rational(0), Rational(1), Rational(1)}};
    CHECK_THROWS_AS(monomial_family({2}, 4, &bad), PreconditionError);
}

TEST_CASE("limit plane of the simplest tangent bundle") {
    auto plane = limit_plane(monomial_family({1}, 3));
    REQUIRE(plane.basis.size() == 2);
    CHECK(plane_equals_capped_span(plane, 3, {1}));
    // vanishing order of the wedge is 1 for a single tangent direction
    CHECK(plane.vanishing_order == 1);
}

TEST_CASE("two-direction bundle at degree three vanishes to order six") {
    auto plane = limit_plane(monomial_family({1, 1}, 3));
    REQUIRE(plane.basis.size() == 4);
    CHECK(plane.vanishing_order == 6);
    CHECK(plane_equals_capped_span(plane, 3, {1, 1}));
    CHECK(contains(plane, monomial_poly({1, 1, 1})));
}

TEST_CASE("deeper bundle: x^2 y^2 z at degree five") {
    auto plane = limit_plane(monomial_family({2, 1}, 5));
    REQUIRE(plane.basis.size() == 6);
    CHECK(plane_equals_capped_span(plane, 5, {2, 1}));
    CHECK(contains(plane, monomial_poly({2, 2, 1})));
}

TEST_CASE("membership is decided exactly") {
    auto plane = limit_plane(monomial_family({1}, 3));
    CHECK(contains(plane, monomial_poly({2, 1})));
    CHECK_FALSE(contains(plane, monomial_poly({0, 3})));  // x1^3 has no x0 factor
}

TEST_CASE("limit span for every small bundle matches the capped-monomial block") {
    // all tails with T <= 24 and d <= 6
    std::vector<std::vector<int>> tails = {{1},       {2},       {3},    {4},   {5},
                                           {1, 1},    {2, 1},    {2, 2}, {3, 1}, {3, 2},
                                           {1, 1, 1}, {2, 1, 1}, {4, 1}, {2, 2, 1},
                                           {1, 1, 1, 1}};
    for (const auto& tail : tails) {
        long long T = count_T(tail);
        if (T > 24) continue;
        int ts = 0;
        for (int x : tail) ts += x;
        for (int d = ts + 1; d <= 6; ++d) {
            auto plane = limit_plane(monomial_family(tail, d));
            INFO("tail size ", tail.size(), " d ", d);
            CHECK(static_cast<long long>(plane.basis.size()) == T);
            CHECK(plane_equals_capped_span(plane, d, tail));
            std::vector<int> full = {d - ts};
            full.insert(full.end(), tail.begin(), tail.end());
            CHECK(contains(plane, monomial_poly(full)));
        }
    }
}

TEST_CASE("the default lambda table is never degenerate for small exponents") {
    // Distinctness of 0, 1, 2, ... per level is all the construction needs.
    std::vector<std::vector<int>> tails = {{4}, {4, 4}, {4, 3, 2}, {2, 2, 2, 2}};
    for (const auto& tail : tails) {
        int ts = 0;
        for (int x : tail) ts += x;
        CHECK_NOTHROW(monomial_family(tail, ts + 1));
    }
}

TEST_CASE("membership is invariant under reordering the curves") {
    auto fam = monomial_family({1, 1}, 4);
    auto target = monomial_poly({2, 1, 1});
    CHECK(contains(limit_plane(fam), target));
    std::reverse(fam.curves.begin(), fam.curves.end());
    CHECK(contains(limit_plane(fam), target));
    std::swap(fam.curves[0], fam.curves[1]);
    CHECK(contains(limit_plane(fam), target));
}

TEST_CASE("normal-form rows certify their targets") {
    for (int r : {3, 4, 5}) {
        for (const auto& row : normal_form_families(r)) {
            for (int d = row.min_degree; d <= 6; ++d) {
                if (row.only_degree && d != *row.only_degree) continue;
                auto plane = limit_plane(row.family(d));
                INFO(row.id, " at degree ", d);
                CHECK(static_cast<int>(plane.basis.size()) == r);
                CHECK(contains(plane, row.target(d)));
            }
        }
    }
}

TEST_CASE("the five-curve family certifies the five-variable cubic exactly") {
    auto plane = limit_plane(five_curve_family());
    REQUIRE(plane.basis.size() == 5);
    CHECK(contains(plane, two_squares_plus_cross_poly()));
    // and it is not the trivial certificate: z^3 is outside the plane
    Poly<Rational> z3(5, 3);
    z3.add_term(Monomial({0, 0, 3, 0, 0}), Rational(1));
    CHECK_FALSE(contains(plane, z3));
}
