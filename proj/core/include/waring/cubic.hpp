#pragma once

#include <string>

#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Ternary cubic toolkit: Hessian determinant, the degree-4 Aronhold
// invariant cutting out border rank <= 3, and the rank/border-rank
// classification of plane cubics.
// ---------------------------------------------------------------------------

/// Determinant of the 3x3 matrix of second partials (a ternary cubic,
/// possibly zero).
template <Scalar F>
Poly<F> hessian(const Poly<F>& f);

/// The degree-4 invariant of ternary cubics vanishing exactly on border rank
/// <= 3. Computed as a full epsilon-tensor contraction of four copies of the
/// symmetric coefficient tensor; the normalization is pinned by the golden
/// value at xyz.
template <Scalar F>
F aronhold(const Poly<F>& f);

enum class CubicRow {
    TripleLine,
    ThreeConcurrentLines,
    DoubleLinePlusLine,
    IrreducibleRankThree,
    IrreducibleRankFourHarmonic,
    Cusp,
    Triangle,
    ConicPlusTransversal,
    SmoothGeneric,
    SingularGeneric,
    ConicPlusTangent,
};

std::string cubic_row_name(CubicRow row);

struct CubicClass {
    CubicRow row = CubicRow::TripleLine;
    int rank = 0;
    int border_rank = 0;
    int hessian_span = 0;      // 0 when the branch never looks at the Hessian
    bool aronhold_zero = false;
    /// rank and border_rank are always certified; the row label inside the
    /// (4,4) stratum is descriptive only.
    bool row_certified = true;
};

/// Exact classification of a nonzero ternary cubic over the rationals.
CubicClass classify_cubic(const Poly<Rational>& f);

}  // namespace waring
