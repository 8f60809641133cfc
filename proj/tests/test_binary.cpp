#include <doctest.h>

#include <random>

#include "waring/binary.hpp"
#include "waring/bounds.hpp"
#include "waring/families.hpp"

using namespace waring;

namespace {

std::mt19937 rng(99);

Poly<Rational> random_binary(int degree, long bound = 5) {
    std::uniform_int_distribution<long> coeff(-bound, bound);
    Poly<Rational> f(2, degree);
    for (int i = 0; i <= degree; ++i)
        f.add_term(Monomial({i, degree - i}), Rational(coeff(rng)));
    return f;
}

Poly<Rational> gl2_image(const Poly<Rational>& f) {
    std::uniform_int_distribution<long> entry(-3, 3);
    while (true) {
        Rational a(entry(rng)), b(entry(rng)), c(entry(rng)), d(entry(rng));
        if ((a * d - b * c).is_zero()) continue;
        std::vector<LinearForm<Rational>> images = {LinearForm<Rational>({a, b}),
                                                    LinearForm<Rational>({c, d})};
        return substitute(f, images);
    }
}

}  // namespace

TEST_CASE("two-exponent monomials: rank max(a,b)+1, border min(a,b)+1") {
    for (int a = 1; a <= 6; ++a) {
        for (int b = a; b <= 6; ++b) {
            auto cert = sylvester_rank(monomial_poly({a, b}));
            CHECK(cert.rank == std::max(a, b) + 1);
            CHECK(cert.border_rank == std::min(a, b) + 1);
        }
    }
}

TEST_CASE("tangent vectors have maximal rank") {
    // x^4 y at degree 5
    auto cert = sylvester_rank(monomial_poly({4, 1}));
    CHECK(cert.rank == 5);
    CHECK(cert.border_rank == 2);
    CHECK(cert.dichotomy_case == BinaryCase::MultipleRootForced);
}

TEST_CASE("sums of two distinct powers have rank two with a square-free witness") {
    for (int d = 3; d <= 8; ++d) {
        Poly<Rational> f(2, d);
        f.add_term(Monomial({d, 0}), Rational(1));
        f.add_term(Monomial({0, d}), Rational(1));
        auto cert = sylvester_rank(f);
        CHECK(cert.rank == 2);
        CHECK(cert.border_rank == 2);
        REQUIRE(cert.kernel_witness.has_value());
        CHECK(square_free(*cert.kernel_witness));
        CHECK(contract(*cert.kernel_witness, f).is_zero());
    }
}

TEST_CASE("random binary forms: dichotomy, witness and flattening agreement") {
    int checked = 0;
    while (checked < 200) {
        int d = 3 + (checked % 6);
        auto f = random_binary(d);
        if (f.is_zero()) continue;
        ++checked;
        auto cert = sylvester_rank(f);
        int r = cert.border_rank;
        CHECK(cert.rank <= d);
        CHECK(cert.rank >= r);
        CHECK((cert.rank == r || cert.rank == d - r + 2));
        CHECK(r == flattening_lower_bound(f).value);
        if (cert.dichotomy_case == BinaryCase::SquareFreeKernel) {
            REQUIRE(cert.kernel_witness.has_value());
            CHECK(square_free(*cert.kernel_witness));
            CHECK(contract(*cert.kernel_witness, f).is_zero());
        }
    }
}

TEST_CASE("rank and border rank are invariant under changes of basis") {
    std::vector<Poly<Rational>> samples = {monomial_poly({2, 3}), monomial_poly({1, 4}),
                                           random_binary(6), random_binary(7)};
    for (const auto& f : samples) {
        if (f.is_zero()) continue;
        auto base = sylvester_rank(f);
        for (int trial = 0; trial < 10; ++trial) {
            auto g = gl2_image(f);
            auto cert = sylvester_rank(g);
            CHECK(cert.rank == base.rank);
            CHECK(cert.border_rank == base.border_rank);
        }
    }
}

TEST_CASE("gaussian-rational binary forms") {
    // (x + iy)^3 + x^3 has rank 2 over Q(i).
    Poly<GaussianRational> f(2, 3);
    LinearForm<GaussianRational> l({GaussianRational::one(), GaussianRational::i()});
    f = power_of_linear(l, 3);
    f.add_term(Monomial({3, 0}), GaussianRational::one());
    auto cert = sylvester_rank(f);
    CHECK(cert.rank == 2);
    CHECK(cert.border_rank == 2);
}

TEST_CASE("binary restriction lower bounds") {
    int d = 5;
    // x^{d-1} y + z^d restricted to the (x, y) plane: rank d
    Poly<Rational> f(3, d);
    f.add_term(Monomial({d - 1, 1, 0}), Rational(1));
    f.add_term(Monomial({0, 0, d}), Rational(1));
    LinearForm<Rational> ex({Rational(1), Rational(0), Rational(0)});
    LinearForm<Rational> ey({Rational(0), Rational(1), Rational(0)});
    CHECK(rank_of_binary_restriction(f, ex, ey) == d);

    CHECK(rank_of_binary_restriction(cubic_fermat(),
                                     LinearForm<Rational>({Rational(1), Rational(0), Rational(0)}),
                                     LinearForm<Rational>({Rational(0), Rational(1), Rational(0)})) == 2);

    // x^2 y^2 + x^3 z restricted to (x, y) at degree 4: the restriction is
    // x^2 y^2 with rank 3.
    Poly<Rational> g(3, 4);
    g.add_term(Monomial({2, 2, 0}), Rational(1));
    g.add_term(Monomial({3, 0, 1}), Rational(1));
    LinearForm<Rational> gx({Rational(1), Rational(0), Rational(0)});
    LinearForm<Rational> gy({Rational(0), Rational(1), Rational(0)});
    CHECK(rank_of_binary_restriction(g, gx, gy) == 3);

    CHECK_THROWS_AS(rank_of_binary_restriction(f, ex, ex), PreconditionError);
}

TEST_CASE("non-binary input is rejected with a reduction hint") {
    CHECK_THROWS_AS(sylvester_rank(cubic_fermat()), PreconditionError);
}
