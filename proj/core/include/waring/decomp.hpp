#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Explicit power-sum decompositions: target = sum of coeff * form^degree.
// ---------------------------------------------------------------------------

template <Scalar F>
struct Decomposition {
    int degree = 0;
    std::vector<std::pair<F, LinearForm<F>>> terms;

    int power_count() const { return static_cast<int>(terms.size()); }

    Poly<F> expand(int nvars) const {
        Poly<F> acc(nvars, degree);
        for (const auto& [c, l] : terms) {
            if (l.is_zero()) throw PreconditionError("Decomposition: zero linear form");
            acc = acc + power_of_linear(l, degree).scaled(c);
        }
        return acc;
    }
};

enum class VerifyStatus { ExactMatch, ApproxMatch, Mismatch };

struct VerifyResult {
    VerifyStatus status = VerifyStatus::Mismatch;
    std::string witness_monomial;   // set on Mismatch
    std::string max_residual;       // set for approximate fields
};

template <ExactScalar F>
VerifyResult verify(const Poly<F>& target, const Decomposition<F>& dec) {
    if (dec.degree != target.degree())
        throw PreconditionError("verify: decomposition degree mismatch");
    Poly<F> diff = dec.expand(target.nvars()) - target;
    VerifyResult out;
    if (diff.is_zero()) {
        out.status = VerifyStatus::ExactMatch;
    } else {
        out.status = VerifyStatus::Mismatch;
        out.witness_monomial = poly_to_string(
            Poly<F>::monomial(target.nvars(), diff.terms().begin()->first, FieldTraits<F>::one()));
    }
    return out;
}

VerifyResult verify(const Poly<BigComplex>& target, const Decomposition<BigComplex>& dec,
                    const BigFloat& tolerance);

/// x_1...x_n as 2^{n-1} signed n-th powers (the polarization identity);
/// verifies exactly. 1 <= n <= 8.
Decomposition<Rational> product_decomposition(int n);

/// Rank-3 expansion of a^2 b into pure cubes: (a+b)^3 - (a-b)^3 - 2 b^3,
/// all over 6. The binary dichotomy certifies 3 is optimal.
template <Scalar F>
std::vector<std::pair<F, LinearForm<F>>> square_times_linear_cubes(
    const LinearForm<F>& a, const LinearForm<F>& b);

// ---------------------------------------------------------------------------
// Catalog of fixed identities (the plane-cubic table and the structured
// cubic families). Entries with rational or Gaussian-rational constants
// verify exactly; entries with cube roots, square roots or roots of unity
// verify at the configured precision.
// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string id;
    std::string description;
    std::string field;  // "rational" | "gaussian" | "bigcomplex"
    int power_count = 0;
    std::optional<int> claimed_rank;
    std::optional<int> claimed_border;
    bool derived_constants = false;  // constants solved here, not transcribed
    std::string note;
};

std::vector<std::string> catalog_ids();
CatalogEntry catalog_info(const std::string& id);

struct CatalogVerification {
    CatalogEntry info;
    VerifyStatus status = VerifyStatus::Mismatch;
    std::string max_residual;
    bool ok = false;
    std::string target_text;
};

/// Builds the entry's target and decomposition and verifies them. Exact
/// entries must come back ExactMatch; numeric entries must meet the
/// tolerance.
CatalogVerification run_catalog_entry(const std::string& id,
                                      long precision_bits = BigFloat::kDefaultPrecision,
                                      double tolerance = 1e-20);

/// Exact targets for cross-checking catalog claims against bound reports.
Poly<Rational> catalog_target(const std::string& id);

/// Materialized target and decomposition for the rational-field entries
/// (empty for gaussian/bigcomplex entries); used by the corruption suite.
std::optional<std::pair<Poly<Rational>, Decomposition<Rational>>> catalog_rational(
    const std::string& id);

template <Scalar F>
std::vector<std::pair<F, LinearForm<F>>> square_times_linear_cubes(
    const LinearForm<F>& a, const LinearForm<F>& b) {
    auto add = [&](const LinearForm<F>& u, const LinearForm<F>& v, int sign_v) {
        std::vector<F> c(u.coefficients);
        for (int i = 0; i < v.nvars(); ++i)
            c[i] = (sign_v > 0) ? c[i] + v.coefficients[i] : c[i] - v.coefficients[i];
        return LinearForm<F>(std::move(c));
    };
    F sixth = FieldTraits<F>::from_rational(Rational(1, 6));
    std::vector<std::pair<F, LinearForm<F>>> out;
    out.emplace_back(sixth, add(a, b, +1));
    out.emplace_back(-sixth, add(a, b, -1));
    out.emplace_back(FieldTraits<F>::from_rational(Rational(-1, 3)), b);
    return out;
}

}  // namespace waring
