#include <doctest.h>

#include <random>

#include "waring/linalg.hpp"

using namespace waring;

namespace {

std::mt19937 rng(123);

Matrix<Rational> random_matrix(int rows, int cols, long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> num(lo, hi), den(1, 4);
    Matrix<Rational> m(rows, cols, Rational::zero());
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(num(rng), den(rng));
    return m;
}

Matrix<Rational> random_invertible(int n) {
    while (true) {
        auto m = random_matrix(n, n, -5, 5);
        if (rank(m) == n) return m;
    }
}

Matrix<Rational> mul(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    Matrix<Rational> c(a.rows(), b.cols(), Rational::zero());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    return c;
}

}  // namespace

TEST_CASE("rref basics") {
    Matrix<Rational> id(5, 5, Rational::zero());
    for (int i = 0; i < 5; ++i) id.at(i, i) = Rational(1);
    CHECK(rank(id) == 5);
    CHECK(rref(id).pivot_columns == std::vector<int>{0, 1, 2, 3, 4});

    Matrix<Rational> zero(3, 4, Rational::zero());
    CHECK(rank(zero) == 0);
    CHECK(kernel(zero).size() == 4);
}

TEST_CASE("bareiss and generic elimination agree") {
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_matrix(6, 8);
        CHECK(rank_bareiss(m) == rref(m).rank);
    }
}

TEST_CASE("rank equals transpose rank and is invariant under invertible factors") {
    for (int trial = 0; trial < 25; ++trial) {
        auto m = random_matrix(10, 12);
        CHECK(rank(m) == rank(m.transpose()));
        auto left = random_invertible(10);
        auto right = random_invertible(12);
        CHECK(rank(mul(left, m)) == rank(m));
        CHECK(rank(mul(m, right)) == rank(m));
    }
}

TEST_CASE("kernel vectors annihilate the matrix exactly") {
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(4, 7);
        auto basis = kernel(m);
        CHECK(static_cast<int>(basis.size()) == 7 - rank(m));
        for (const auto& v : basis) {
            for (int r = 0; r < m.rows(); ++r) {
                Rational dot;
                for (int c = 0; c < m.cols(); ++c) dot += m.at(r, c) * v[c];
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("univariate polynomials and rational functions") {
    UPoly t = UPoly::t();
    UPoly p = t * t + t;  // t^2 + t
    CHECK(p.valuation() == 1);
    CHECK(p.degree() == 2);

    RatFun f(p, UPoly::t(3));  // (t^2 + t)/t^3 = (t+1)/t^2
    CHECK(f.valuation() == -2);
    RatFun g = f * RatFun(UPoly::t(2), UPoly::constant(Rational(1)));
    CHECK(g.valuation() == 0);
    CHECK(g.eval0() == Rational(1));

    CHECK((RatFun::t() * RatFun::t().inv()) == RatFun::one());
    CHECK_THROWS_AS(RatFun::zero().inv(), PreconditionError);
    CHECK_THROWS_AS(f.eval0(), PreconditionError);  // pole at 0
}

TEST_CASE("limit of [(1,0),(1,t)] is the full plane") {
    Matrix<RatFun> m(2, 2, RatFun::zero());
    m.at(0, 0) = RatFun::one();
    m.at(0, 1) = RatFun::one();
    m.at(1, 1) = RatFun::t();
    auto lim = limit_column_space(m);
    CHECK(lim.basis.size() == 2);
    Matrix<Rational> b(2, 2, Rational::zero());
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) b.at(r, c) = lim.basis[c][r];
    CHECK(rank(b) == 2);
    CHECK(lim.vanishing_order == 1);
}

TEST_CASE("limit of [(1,t),(1,t^2)] is spanned by (1,0) and (0,1)") {
    Matrix<RatFun> m(2, 2, RatFun::zero());
    m.at(0, 0) = RatFun::one();
    m.at(1, 0) = RatFun::t();
    m.at(0, 1) = RatFun::one();
    m.at(1, 1) = RatFun::t() * RatFun::t();
    auto lim = limit_column_space(m);
    REQUIRE(lim.basis.size() == 2);
    // The span contains both unit vectors.
    Matrix<Rational> b(2, 2, Rational::zero());
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r) b.at(r, c) = lim.basis[c][r];
    CHECK(rank(b) == 2);
}

TEST_CASE("dependent columns are rejected with a witness") {
    Matrix<RatFun> m(2, 2, RatFun::zero());
    m.at(0, 0) = RatFun::one();
    m.at(0, 1) = RatFun::t();  // second column = t * first
    m.at(1, 0) = RatFun::zero();
    m.at(1, 1) = RatFun::zero();
    CHECK_THROWS_AS(limit_column_space(m), PreconditionError);
}

TEST_CASE("limit dimension equals generic rank for random full-rank inputs") {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 3);
    int done = 0;
    while (done < 50) {
        Matrix<RatFun> m(5, 3, RatFun::zero());
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 3; ++c) {
                std::vector<Rational> coeffs(deg(rng) + 1, Rational::zero());
                for (auto& x : coeffs) x = Rational(coeff(rng));
                m.at(r, c) = RatFun(UPoly(std::move(coeffs)), UPoly::constant(Rational(1)));
            }
        if (rank(m) != 3) continue;  // generic rank over the function field
        auto lim = limit_column_space(m);
        CHECK(lim.basis.size() == 3);
        ++done;
    }
}
