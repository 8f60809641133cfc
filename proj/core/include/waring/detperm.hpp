#pragma once

#include <vector>

#include "waring/bounds.hpp"
#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// det_n and per_n as polynomials in n^2 variables, flat index i*n + j, plus
// the explicit product decompositions behind their rank upper bounds.
// ---------------------------------------------------------------------------

struct MatrixPolySpec {
    int n = 0;
    DetPerm kind = DetPerm::Det;
    int var(int i, int j) const { return i * n + j; }
};

/// n! terms with signs by permutation parity (Det) or all +1 (Perm). n <= 7.
Poly<Rational> build_matrix_poly(const MatrixPolySpec& spec);

struct WeightedProduct {
    Rational weight;
    std::vector<LinearForm<Rational>> factors;  // n independent linear forms
};

/// The permanent as 2^{n-1} weighted products of n linear forms
/// (sign-vector expansion, first sign fixed to +1, remaining bits in binary
/// counting order). The weighted sum expands exactly to per_n. 2 <= n <= 5.
std::vector<WeightedProduct> ryser_decomposition(int n);

/// Rank upper bounds from the product decompositions: 2^{n-1} n! for the
/// determinant, 4^{n-1} for the permanent.
long long gurvits_upper(int n, DetPerm kind);

/// Expand a weighted product of linear forms (for verifying decompositions).
Poly<Rational> expand_product(const WeightedProduct& p);

}  // namespace waring
