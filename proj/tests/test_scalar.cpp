#include <doctest.h>

#include <random>

#include "waring/scalar.hpp"

using namespace waring;

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational::parse("5/10") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), PreconditionError);
    CHECK_THROWS_AS(Rational(0).inv(), PreconditionError);
}

TEST_CASE("field laws on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    auto rnd = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < 10000; ++i) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("gaussian rationals") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(Rational(-1)));
    CHECK(i.conj().conj() == i);
    CHECK((GaussianRational(Rational(3, 4), Rational(-2, 5)) *
           GaussianRational(Rational(3, 4), Rational(-2, 5)).inv()) == GaussianRational::one());

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    for (int k = 0; k < 500; ++k) {
        GaussianRational z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        // |z|^2 = z conj(z), nonnegative, zero iff z = 0
        GaussianRational prod = z * z.conj();
        CHECK(prod.im().is_zero());
        CHECK(prod.re() == z.norm());
        CHECK(z.norm() >= Rational(0));
        CHECK((z.norm().is_zero()) == z.is_zero());
    }

    CHECK(GaussianRational::parse("1/2+1/3*i") ==
          GaussianRational(Rational(1, 2), Rational(1, 3)));
    CHECK(GaussianRational::parse("-2/3*i") == GaussianRational(Rational(0), Rational(-2, 3)));
    CHECK(GaussianRational::parse("7") == GaussianRational(Rational(7)));
    GaussianRational z(Rational(-5, 7), Rational(3, 11));
    CHECK(GaussianRational::parse(z.str()) == z);
}

TEST_CASE("cube of the primitive cube root of unity is 1 to 1e-70") {
    BigComplex omega = BigComplex::root_of_unity(3, 256);
    BigComplex cube = omega * omega * omega;
    BigFloat err = (cube - BigComplex::one(256)).abs();
    CHECK(err < BigFloat(1e-70, 256));
    CHECK(cube.approx_eq(BigComplex::one(256), BigFloat(1e-70, 256)));
}

TEST_CASE("embeddings are ring homomorphisms") {
    CHECK(embed_gaussian(Rational(0)).is_zero());
    // 3/4 is dyadic: exact at any precision
    BigComplex x = embed_complex(Rational(3, 4), 64);
    CHECK((x - BigComplex(BigFloat(0.75, 64), BigFloat(64))).is_zero());

    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (int k = 0; k < 200; ++k) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        CHECK(embed_gaussian(a + b) == embed_gaussian(a) + embed_gaussian(b));
        CHECK(embed_gaussian(a * b) == embed_gaussian(a) * embed_gaussian(b));
    }
}

TEST_CASE("embedding 1/3 at 128 bits has relative error below 2^-127") {
    BigComplex lo = embed_complex(Rational(1, 3), 128);
    BigComplex hi = embed_complex(Rational(1, 3), 512);
    BigFloat err = (lo - hi).abs() / hi.abs();
    BigFloat bound = BigFloat(Rational(1), 512);
    for (int i = 0; i < 127; ++i) bound = bound / BigFloat(Rational(2), 512);
    CHECK(err < bound);
}

TEST_CASE("doubling the precision never worsens the embedding error") {
    BigComplex reference = embed_complex(Rational(1, 3), 1024);
    BigFloat prev_err = (embed_complex(Rational(1, 3), 64) - reference).abs();
    for (long p = 128; p <= 512; p *= 2) {
        BigFloat err = (embed_complex(Rational(1, 3), p) - reference).abs();
        CHECK(err <= prev_err);
        prev_err = err;
    }
}

TEST_CASE("bigcomplex division by zero raises") {
    CHECK_THROWS_AS(BigComplex::one() / BigComplex::zero(), PreconditionError);
}
