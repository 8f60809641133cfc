#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Families of curves t -> W whose d-th powers span a moving plane; the limit
// of that plane as t -> 0 certifies border-rank upper bounds.
// ---------------------------------------------------------------------------

struct CurveFamily {
    int nvars = 0;
    int degree = 0;
    /// One curve per column: coordinates are polynomials in t.
    std::vector<std::vector<UPoly>> curves;
    std::vector<std::string> labels;
};

struct LimitPlane {
    int nvars = 0;
    int degree = 0;
    std::vector<Poly<Rational>> basis;  // linearly independent, over Rational
    int vanishing_order = 0;
};

/// The curve bundle for a monomial with tail exponents (b_1..b_n) and total
/// degree d: one curve per tuple (s_1..s_n), 0 <= s_i <= b_i, in
/// lexicographic tuple order, with curve x_0 + sum_i t^i lambda[i][s_i] x_i.
/// The default lambda table is lambda[i][s] = s; values must be distinct per
/// level and lambda[i][0] = 0.
CurveFamily monomial_family(const std::vector<int>& tail_exponents, int d,
                            const std::vector<std::vector<Rational>>* lambdas = nullptr);

/// Exact limit of the span of d-th powers of the family's curves.
LimitPlane limit_plane(const CurveFamily& fam);

/// Exact membership via rank comparison.
bool contains(const LimitPlane& plane, const Poly<Rational>& f);

// ---------------------------------------------------------------------------
// Normal-form rows for small border rank. Each row carries a family and the
// concrete plane element the certification checks; where the classical
// normal form only lies in the plane after a change of scale (or where a
// cross term is forced), the stored target is the solved element and the
// row is flagged derived.
// ---------------------------------------------------------------------------

struct NormalFormRow {
    std::string id;
    int border_rank = 0;
    int min_degree = 3;
    std::optional<int> only_degree;  // set for the degree-3-only row
    std::string curves_text;
    std::string normal_form_text;  // classical shape, independent of d
    std::string rank_range;
    bool derived = false;
    std::string note;
    std::function<CurveFamily(int d)> family;
    std::function<Poly<Rational>(int d)> target;
};

/// Rows for border rank 3, 4 and 5. Rank-5 rows are the rank-4 rows plus a
/// constant fifth direction, the depth-four osculating family, and (at
/// degree 3 only) the five-curve family for x^2 u + y^2 v + x y z.
std::vector<NormalFormRow> normal_form_families(int r);

/// The five-curve degree-3 family whose limit plane contains
/// x^2 u + y^2 v + x y z exactly; curve coefficients are solved constants.
CurveFamily five_curve_family();

}  // namespace waring
