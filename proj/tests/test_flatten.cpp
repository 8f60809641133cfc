#include <doctest.h>

#include <random>

#include "waring/bounds.hpp"
#include "waring/detperm.hpp"
#include "waring/families.hpp"
#include "waring/flatten.hpp"

using namespace waring;

namespace {

std::mt19937 rng(2024);

Poly<Rational> random_ternary(int degree) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    auto monos = monomials_of_degree(3, degree);
    Poly<Rational> f(3, degree);
    for (const auto& m : monos) f.add_term(m, Rational(coeff(rng)));
    return f;
}

std::vector<LinearForm<Rational>> random_change_of_basis(int n) {
    std::uniform_int_distribution<long> entry(-3, 3);
    while (true) {
        Matrix<Rational> a(n, n, Rational::zero());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = Rational(entry(rng));
        if (rank(a) != n) continue;
        std::vector<LinearForm<Rational>> images;
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> c;
            for (int j = 0; j < n; ++j) c.push_back(a.at(i, j));
            images.push_back(LinearForm<Rational>(std::move(c)));
        }
        return images;
    }
}

// The thirteen-variable quartic whose catalecticant ranks decrease from
// s = 1 to s = 2.
Poly<Rational> stanley_quartic() {
    Poly<Rational> f(13, 4);
    auto term = [&](int coeff_var, int a, int b, int c) {
        std::vector<int> e(13, 0);
        e[coeff_var] = 1;
        e[10] += a;
        e[11] += b;
        e[12] += c;
        f.add_term(Monomial(std::move(e)), Rational::one());
    };
    // x_i times the degree-3 monomials of (x11, x12, x13) in order.
    term(0, 3, 0, 0);
    term(1, 2, 1, 0);
    term(2, 2, 0, 1);
    term(3, 1, 2, 0);
    term(4, 1, 1, 1);
    term(5, 1, 0, 2);
    term(6, 0, 3, 0);
    term(7, 0, 2, 1);
    term(8, 0, 1, 2);
    term(9, 0, 0, 3);
    return f;
}

}  // namespace

TEST_CASE("catalecticant of a pure power has rank one") {
    for (int d = 2; d <= 6; ++d) {
        LinearForm<Rational> l({Rational(1), Rational(2), Rational(-1)});
        auto f = power_of_linear(l, d);
        for (int s = 1; s <= d - 1; ++s) CHECK(catalecticant_rank(f, s) == 1);
    }
}

TEST_CASE("first catalecticant of det_3 has rank nine") {
    auto det3 = build_matrix_poly({3, DetPerm::Det});
    CHECK(catalecticant_rank(det3, 1) == 9);
}

TEST_CASE("catalecticant rank of a monomial matches the tuple count") {
    // x^3 y^2 z at the middle order
    auto f = monomial_poly({3, 2, 1});
    int d = 6;
    CHECK(catalecticant_rank(f, d / 2) == count_S({3, 2, 1}, d / 2));

    // x^2 y^2 at the middle order: the 3x3 matrix has full rank, so the
    // kernel there is trivial.
    auto g = monomial_poly({2, 2});
    auto cat = catalecticant(g, 2);
    CHECK(rank(cat.matrix) == 3);
    CHECK(kernel(cat.matrix).empty());

    // x^3 y at s = 3: rank 2 equals the count of first-order duals, so the
    // order-one kernel is trivial too.
    auto h = monomial_poly({3, 1});
    auto cat1 = catalecticant(h, 3);
    CHECK(rank(cat1.matrix) == 2);
    CHECK(kernel(cat1.matrix).empty());
}

TEST_CASE("the thirteen-variable quartic has decreasing catalecticant ranks") {
    auto f = stanley_quartic();
    CHECK(catalecticant_rank(f, 1) == 13);
    CHECK(catalecticant_rank(f, 2) == 12);
    auto b = flattening_lower_bound(f);
    CHECK(b.value == 13);
    CHECK(b.argmax_s == 1);
}

TEST_CASE("block sums have full first catalecticant") {
    auto f = triple_blocks_poly(2);
    CHECK(catalecticant_rank(f, 1) == 6);
}

TEST_CASE("span dimension") {
    Poly<Rational> f(3, 3);
    f.add_term(Monomial({3, 0, 0}), Rational(1));
    f.add_term(Monomial({0, 3, 0}), Rational(1));
    CHECK(span_dim(f) == 2);

    CHECK(span_dim(two_squares_plus_cross_poly()) == 5);

    Poly<Rational> g(2, 3);
    g.add_term(Monomial({3, 0}), Rational(1));
    g.add_term(Monomial({2, 1}), Rational(3));
    g.add_term(Monomial({1, 2}), Rational(3));
    g.add_term(Monomial({0, 3}), Rational(1));  // (x+y)^3
    CHECK(span_dim(g) == 1);

    CHECK_THROWS_AS(span_dim(Poly<Rational>(3, 3)), PreconditionError);
}

TEST_CASE("flattening lower bounds from the tables") {
    auto b4 = flattening_lower_bound(product_poly(4));
    CHECK(b4.value == 6);
    CHECK(b4.argmax_s == 2);

    auto bm = flattening_lower_bound(monomial_poly({2, 1, 1}));
    CHECK(bm.value == 4);
    CHECK(bm.argmax_s == 2);

    auto bq = flattening_lower_bound(monomial_poly({1, 1}));
    CHECK(bq.value == 2);
    CHECK(bq.argmax_s == 1);
}

TEST_CASE("transpose symmetry of catalecticant ranks") {
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_ternary(5);
        if (f.is_zero()) continue;
        for (int s = 1; s <= 4; ++s)
            CHECK(catalecticant_rank(f, s) == catalecticant_rank(f, 5 - s));
    }
}

TEST_CASE("catalecticant rank is a change-of-basis invariant") {
    std::vector<Poly<Rational>> samples = {monomial_poly({2, 1, 1}), cubic_fermat(),
                                           random_ternary(4)};
    for (const auto& f : samples) {
        if (f.is_zero()) continue;
        for (int trial = 0; trial < 20; ++trial) {
            auto g = substitute(f, random_change_of_basis(3));
            for (int s = 1; s <= f.degree() / 2; ++s)
                CHECK(catalecticant_rank(g, s) == catalecticant_rank(f, s));
        }
    }
}

TEST_CASE("catalecticant rank is subadditive") {
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_ternary(4), g = random_ternary(4);
        if (f.is_zero() || g.is_zero() || (f + g).is_zero()) continue;
        for (int s = 1; s <= 2; ++s)
            CHECK(catalecticant_rank(f + g, s) <=
                  catalecticant_rank(f, s) + catalecticant_rank(g, s));
    }
}

TEST_CASE("ternary catalecticant ranks are nondecreasing up to the middle") {
    for (int trial = 0; trial < 20; ++trial) {
        int degree = 4 + (trial % 3);
        auto f = random_ternary(degree);
        if (f.is_zero()) continue;
        auto b = flattening_lower_bound(f);
        for (size_t i = 1; i < b.ranks_per_s.size(); ++i)
            CHECK(b.ranks_per_s[i - 1] <= b.ranks_per_s[i]);
    }
}

TEST_CASE("span reduction factors exactly and round-trips") {
    // A cubic in 4 variables that only uses a 2-dimensional space.
    Poly<Rational> f(4, 3);
    // (x0 + x1)^3 + (x0 - x3)^3
    LinearForm<Rational> l1({Rational(1), Rational(1), Rational(0), Rational(0)});
    LinearForm<Rational> l2({Rational(1), Rational(0), Rational(0), Rational(-1)});
    f = power_of_linear(l1, 3) + power_of_linear(l2, 3);
    auto red = reduce_to_span(f);
    CHECK(red.reduced.nvars() == 2);
    CHECK(span_dim(red.reduced) == 2);

    // GL-invariance of span dimension under a random substitution.
    auto g = substitute(f, random_change_of_basis(4));
    CHECK(span_dim(g) == 2);
}
