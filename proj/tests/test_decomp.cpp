#include <doctest.h>

#include <random>

#include "waring/bounds.hpp"
#include "waring/decomp.hpp"
#include "waring/families.hpp"

using namespace waring;

TEST_CASE("the four-cube identity for a product of three variables") {
    Decomposition<Rational> dec;
    dec.degree = 3;
    auto form = [&](long sx, long sy, long sz) {
        return LinearForm<Rational>({Rational(sx), Rational(sy), Rational(sz)});
    };
    Rational w(1, 24);
    dec.terms.emplace_back(w, form(1, 1, 1));
    dec.terms.emplace_back(w, form(1, -1, -1));
    dec.terms.emplace_back(-w, form(1, -1, 1));
    dec.terms.emplace_back(-w, form(1, 1, -1));
    CHECK(verify(cubic_triangle(), dec).status == VerifyStatus::ExactMatch);

    // Perturbing one coefficient must produce a mismatch with a witness.
    dec.terms[0].first += Rational(1, 1000);
    auto res = verify(cubic_triangle(), dec);
    CHECK(res.status == VerifyStatus::Mismatch);
    CHECK_FALSE(res.witness_monomial.empty());
}

TEST_CASE("polarization decompositions of products") {
    for (int n = 2; n <= 6; ++n) {
        auto dec = product_decomposition(n);
        CHECK(dec.power_count() == (1 << (n - 1)));
        CHECK(verify(product_poly(n), dec).status == VerifyStatus::ExactMatch);
    }
    CHECK(product_decomposition(1).power_count() == 1);
}

TEST_CASE("every catalog identity verifies at the default settings") {
    for (const auto& id : catalog_ids()) {
        auto v = run_catalog_entry(id);
        INFO(id, " status");
        CHECK(v.ok);
        if (v.info.field == "rational" || v.info.field == "gaussian")
            CHECK(v.status == VerifyStatus::ExactMatch);
    }
}

TEST_CASE("catalog claims are consistent with the aggregated lower bounds") {
    for (const auto& id : catalog_ids()) {
        auto info = catalog_info(id);
        if (!info.claimed_rank) continue;
        Poly<Rational> target;
        try {
            target = catalog_target(id);
        } catch (const PreconditionError&) {
            continue;  // numeric-only target
        }
        auto rep = aggregate(target);
        INFO(id);
        CHECK(static_cast<long long>(info.power_count) >= rep.rank_lower.value);
    }
}

TEST_CASE("verification rejects corrupted catalog entries") {
    std::mt19937 rng(5);
    for (const auto& id : catalog_ids()) {
        auto parts = catalog_rational(id);
        if (!parts) continue;
        auto& [target, dec] = *parts;
        std::uniform_int_distribution<size_t> pick(0, dec.terms.size() - 1);
        std::uniform_int_distribution<long> bump(1, 997);
        for (int trial = 0; trial < 100; ++trial) {
            auto corrupted = dec;
            corrupted.terms[pick(rng)].first += Rational(bump(rng), 1000);
            CHECK(verify(target, corrupted).status == VerifyStatus::Mismatch);
        }
    }
}

TEST_CASE("tolerance is enforced for numeric entries") {
    // At 256 bits the residual is far below 1e-20; an absurdly small
    // tolerance must flip the verdict.
    auto strict = run_catalog_entry("cubic.concurrent", 256, 1e-90);
    CHECK_FALSE(strict.ok);
    auto normal = run_catalog_entry("cubic.concurrent", 256, 1e-20);
    CHECK(normal.ok);
}

TEST_CASE("square-times-linear expansion is exact") {
    LinearForm<Rational> a({Rational(1), Rational(0), Rational(2)});
    LinearForm<Rational> b({Rational(0), Rational(3), Rational(-1)});
    Decomposition<Rational> dec;
    dec.degree = 3;
    for (auto& [c, l] : square_times_linear_cubes(a, b)) dec.terms.emplace_back(c, l);
    Poly<Rational> target = power_of_linear(a, 1) * power_of_linear(a, 1) *
                            power_of_linear(b, 1);
    CHECK(verify(target, dec).status == VerifyStatus::ExactMatch);
}

TEST_CASE("degree mismatches are rejected") {
    Decomposition<Rational> dec;
    dec.degree = 2;
    dec.terms.emplace_back(Rational(1), LinearForm<Rational>({Rational(1), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(verify(cubic_triangle(), dec), PreconditionError);
}
