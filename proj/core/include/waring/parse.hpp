#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/decomp.hpp"
#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Text grammar: terms joined by + and -, each term a product of an optional
// coefficient and variable powers joined by '*' with '^' exponents.
// Variables are x0..x{n-1} unless names are supplied. Expanded form only; a
// non-homogeneous input is rejected with the offending term degrees.
// ---------------------------------------------------------------------------

struct ParseOptions {
    std::optional<int> nvars;            // inferred from the variables seen if absent
    std::vector<std::string> variables;  // custom names; empty means x0, x1, ...
};

Poly<Rational> parse_poly(const std::string& text, const ParseOptions& opts = {});
Poly<GaussianRational> parse_poly_gaussian(const std::string& text,
                                           const ParseOptions& opts = {});

/// Structured input: a JSON array of [exponent-vector, coefficient-string]
/// pairs, e.g. [[[2,1,0], "1/2"], [[0,0,3], "-1"]].
Poly<Rational> poly_from_structured(const std::string& json_text);

/// Decomposition file: one term per line, "coeff | c1, c2, ..., cn".
/// Blank lines and lines starting with '#' are skipped.
Decomposition<Rational> parse_decomposition(const std::string& text, int nvars, int degree);
Decomposition<GaussianRational> parse_decomposition_gaussian(const std::string& text, int nvars,
                                                             int degree);

}  // namespace waring
