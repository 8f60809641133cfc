#pragma once

#include <utility>
#include <vector>

#include "waring/linalg.hpp"
#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Catalecticant of f at s: the matrix of the contraction map taking a dual
// monomial of degree d-s (column) to a polynomial of degree s (rows). Entry
// (i, j) is the coefficient of row_basis[i] in the iterated partial
// derivative of f by col_basis[j]; entries are integer multiples of f's
// coefficients, and row scaling never moves the rank.
// ---------------------------------------------------------------------------

template <ExactScalar F>
struct Catalecticant {
    int s = 0;
    int d_minus_s = 0;
    std::vector<Monomial> row_basis;  // degree s, descending graded lex
    std::vector<Monomial> col_basis;  // degree d-s, descending graded lex
    Matrix<F> matrix;
};

template <ExactScalar F>
Catalecticant<F> catalecticant(const Poly<F>& f, int s) {
    const int d = f.degree();
    if (s < 1 || s > d - 1) throw PreconditionError("catalecticant: s out of range");
    Catalecticant<F> cat;
    cat.s = s;
    cat.d_minus_s = d - s;
    cat.row_basis = monomials_of_degree(f.nvars(), s);
    cat.col_basis = monomials_of_degree(f.nvars(), d - s);
    cat.matrix = Matrix<F>(static_cast<int>(cat.row_basis.size()),
                           static_cast<int>(cat.col_basis.size()), FieldTraits<F>::zero());
    // Column j holds the contraction of f by col_basis[j]. Scanning f's terms
    // directly avoids building each derivative polynomial.
    for (const auto& [m, c] : f.terms()) {
        for (size_t j = 0; j < cat.col_basis.size(); ++j) {
            const Monomial& mu = cat.col_basis[j];
            if (!mu.divides(m)) continue;
            long long scale = 1;
            for (int i = 0; i < m.nvars(); ++i)
                scale *= falling_factorial(m.exponents[i], mu.exponents[i]);
            Monomial row = m / mu;
            auto it = std::lower_bound(cat.row_basis.begin(), cat.row_basis.end(), row,
                                       GrlexDescending{});
            int ri = static_cast<int>(it - cat.row_basis.begin());
            cat.matrix.at(ri, static_cast<int>(j)) =
                cat.matrix.at(ri, static_cast<int>(j)) +
                c * FieldTraits<F>::from_rational(Rational(scale));
        }
    }
    return cat;
}

template <ExactScalar F>
int catalecticant_rank(const Poly<F>& f, int s) {
    return rank(catalecticant(f, s).matrix);
}

/// Number of essential variables: the rank of the first catalecticant.
template <ExactScalar F>
int span_dim(const Poly<F>& f) {
    if (f.is_zero()) throw PreconditionError("span_dim: zero polynomial");
    if (f.degree() == 0) throw PreconditionError("span_dim: constant polynomial");
    if (f.degree() == 1) {
        // A linear form spans one direction.
        return 1;
    }
    return catalecticant_rank(f, 1);
}

struct FlatteningBound {
    int value = 0;
    int argmax_s = 0;
    std::vector<int> ranks_per_s;  // ranks at s = 1 .. floor(d/2)
};

/// Border-rank lower bound: the maximum catalecticant rank over
/// 1 <= s <= floor(d/2). Every s is evaluated because the rank sequence can
/// decrease; ties break toward smaller s.
template <ExactScalar F>
FlatteningBound flattening_lower_bound(const Poly<F>& f) {
    if (f.degree() < 2) throw PreconditionError("flattening_lower_bound: degree must be >= 2");
    FlatteningBound out;
    for (int s = 1; s <= f.degree() / 2; ++s) {
        int r = catalecticant_rank(f, s);
        out.ranks_per_s.push_back(r);
        if (r > out.value) {
            out.value = r;
            out.argmax_s = s;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Span reduction: rewrite f in dim<f> essential variables. Returns the
// reduced polynomial g (in k variables) and the k x n coordinate matrix C of
// the essential linear forms, with substitute(g, rows of C) == f. The
// factorization is verified exactly before returning.
// ---------------------------------------------------------------------------

template <ExactScalar F>
struct SpanReduction {
    Poly<F> reduced;
    std::vector<LinearForm<F>> span_basis;  // k forms in the original n variables
};

template <ExactScalar F>
SpanReduction<F> reduce_to_span(const Poly<F>& f) {
    const int n = f.nvars(), d = f.degree();
    if (f.is_zero()) throw PreconditionError("reduce_to_span: zero polynomial");

    // Rows: all (d-1)-fold contractions of f, i.e. a spanning set of the
    // essential space.
    auto duals = monomials_of_degree(n, d - 1);
    Matrix<F> rows(static_cast<int>(duals.size()), n, FieldTraits<F>::zero());
    for (size_t i = 0; i < duals.size(); ++i) {
        Poly<F> lin = contract(Poly<F>::monomial(n, duals[i], FieldTraits<F>::one()), f);
        for (const auto& [m, c] : lin.terms()) {
            for (int v = 0; v < n; ++v)
                if (m.exponents[v] == 1) rows.at(static_cast<int>(i), v) = c;
        }
    }
    auto r = rref(rows);
    const int k = r.rank;

    SpanReduction<F> out;
    for (int i = 0; i < k; ++i) {
        std::vector<F> coeffs(n, FieldTraits<F>::zero());
        for (int v = 0; v < n; ++v) coeffs[v] = r.reduced.at(i, v);
        out.span_basis.push_back(LinearForm<F>(std::move(coeffs)));
    }
    if (k == n) {
        out.reduced = f;
        return out;
    }

    // Right inverse of the rref basis: unit vectors at the pivot columns.
    std::vector<LinearForm<F>> down(n);
    for (int v = 0; v < n; ++v) down[v] = LinearForm<F>(std::vector<F>(k, FieldTraits<F>::zero()));
    for (int i = 0; i < k; ++i) down[r.pivot_columns[i]].coefficients[i] = FieldTraits<F>::one();

    out.reduced = substitute(f, down);

    // Round-trip check: expanding the reduced polynomial along the span basis
    // must reproduce f.
    std::vector<LinearForm<F>> up;
    for (int i = 0; i < k; ++i) up.push_back(out.span_basis[i]);
    Poly<F> back = substitute(out.reduced, up);
    if (!(back == f))
        throw PreconditionError("reduce_to_span: span factorization failed to verify");
    return out;
}

}  // namespace waring
