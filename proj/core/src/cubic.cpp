#include "waring/cubic.hpp"

#include <array>

#include "waring/binary.hpp"
#include "waring/flatten.hpp"

namespace waring {

template <Scalar F>
Poly<F> hessian(const Poly<F>& f) {
    if (f.nvars() != 3 || f.degree() != 3)
        throw PreconditionError("hessian: ternary cubic required");
    std::array<std::array<Poly<F>, 3>, 3> h;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = f.diff(i).diff(j);

    auto term = [&](int a, int b, int c) { return h[0][a] * h[1][b] * h[2][c]; };
    Poly<F> det = term(0, 1, 2) - term(0, 2, 1) + term(2, 0, 1)
                - term(1, 0, 2) + term(1, 2, 0) - term(2, 1, 0);
    return det;
}

namespace {

constexpr int kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
constexpr int kPermSign[6] = {1, -1, -1, 1, 1, -1};

}  // namespace

template <Scalar F>
F aronhold(const Poly<F>& f) {
    if (f.nvars() != 3 || f.degree() != 3)
        throw PreconditionError("aronhold: ternary cubic required");

    // Symmetric coefficient tensor: f = sum_{i,j,k} T[i][j][k] x_i x_j x_k.
    std::array<std::array<std::array<F, 3>, 3>, 3> T;
    for (auto& a : T)
        for (auto& b : a) b.fill(FieldTraits<F>::zero());
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> idx;
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < m.exponents[v]; ++k) idx.push_back(v);
        F val = c * FieldTraits<F>::from_rational(multinomial(3, m.exponents).inv());
        T[idx[0]][idx[1]][idx[2]] = val;
        T[idx[0]][idx[2]][idx[1]] = val;
        T[idx[1]][idx[0]][idx[2]] = val;
        T[idx[1]][idx[2]][idx[0]] = val;
        T[idx[2]][idx[0]][idx[1]] = val;
        T[idx[2]][idx[1]][idx[0]] = val;
    }

    // Full contraction of four copies of T against four epsilon tensors;
    // any nonzero such contraction spans the one-dimensional space of
    // degree-4 invariants. Indices: eps(a)eps(b)eps(c)eps(d) *
    // T(a1,b1,c1) T(a2,b2,d1) T(a3,c2,d2) T(b3,c3,d3).
    F acc = FieldTraits<F>::zero();
    for (int pa = 0; pa < 6; ++pa)
        for (int pb = 0; pb < 6; ++pb)
            for (int pc = 0; pc < 6; ++pc)
                for (int pd = 0; pd < 6; ++pd) {
                    const int* a = kPerms[pa];
                    const int* b = kPerms[pb];
                    const int* c = kPerms[pc];
                    const int* d = kPerms[pd];
                    int sign = kPermSign[pa] * kPermSign[pb] * kPermSign[pc] * kPermSign[pd];
                    F prod = T[a[0]][b[0]][c[0]] * T[a[1]][b[1]][d[0]] *
                             T[a[2]][c[1]][d[1]] * T[b[2]][c[2]][d[2]];
                    if (prod.is_zero()) continue;
                    acc = (sign > 0) ? acc + prod : acc - prod;
                }
    return acc;
}

std::string cubic_row_name(CubicRow row) {
    switch (row) {
        case CubicRow::TripleLine: return "triple line";
        case CubicRow::ThreeConcurrentLines: return "three concurrent lines";
        case CubicRow::DoubleLinePlusLine: return "double line + line";
        case CubicRow::IrreducibleRankThree: return "irreducible, rank 3";
        case CubicRow::IrreducibleRankFourHarmonic: return "irreducible, smooth Hessian";
        case CubicRow::Cusp: return "cusp";
        case CubicRow::Triangle: return "triangle";
        case CubicRow::ConicPlusTransversal: return "conic + transversal line";
        case CubicRow::SmoothGeneric: return "irreducible, smooth";
        case CubicRow::SingularGeneric: return "irreducible, singular";
        case CubicRow::ConicPlusTangent: return "conic + tangent line";
    }
    return "?";
}

CubicClass classify_cubic(const Poly<Rational>& f) {
    if (f.nvars() != 3 || f.degree() != 3)
        throw PreconditionError("classify_cubic: ternary cubic required");
    if (f.is_zero()) throw PreconditionError("classify_cubic: zero polynomial");

    CubicClass out;
    int span = span_dim(f);

    if (span == 1) {
        out.row = CubicRow::TripleLine;
        out.rank = out.border_rank = 1;
        return out;
    }
    if (span == 2) {
        auto red = reduce_to_span(f);
        auto cert = sylvester_rank(red.reduced);
        out.rank = cert.rank;
        out.border_rank = cert.border_rank;
        out.row = (cert.rank == 2) ? CubicRow::ThreeConcurrentLines
                                   : CubicRow::DoubleLinePlusLine;
        return out;
    }

    Rational s = aronhold(f);
    out.aronhold_zero = s.is_zero();
    if (out.aronhold_zero) {
        out.border_rank = 3;
        Poly<Rational> h = hessian(f);
        out.hessian_span = span_dim(h);
        switch (out.hessian_span) {
            case 3:
                out.row = CubicRow::IrreducibleRankThree;
                out.rank = 3;
                break;
            case 2:
                out.row = CubicRow::Cusp;
                out.rank = 4;
                break;
            default:
                out.row = CubicRow::ConicPlusTangent;
                out.rank = 5;
                break;
        }
        return out;
    }

    // Border rank 4 stratum: rank is 4 in every row. The finer label would
    // need factorization over the complex numbers, so it is descriptive.
    out.rank = 4;
    out.border_rank = 4;
    out.row_certified = false;
    Poly<Rational> h = hessian(f);
    out.hessian_span = span_dim(h);
    // Hessian proportional to f marks the triangle; beyond that the label
    // would need factorization over the complex numbers.
    bool proportional = false;
    if (!h.is_zero()) {
        const auto& [mf, cf] = *f.terms().begin();
        Rational ch = h.coefficient(mf);
        if (!ch.is_zero()) proportional = (h.scaled(cf / ch) == f);
    }
    if (proportional) {
        out.row = CubicRow::Triangle;
    } else if (out.hessian_span < 3) {
        out.row = CubicRow::SingularGeneric;
    } else {
        out.row = CubicRow::SmoothGeneric;
    }
    return out;
}

template Poly<Rational> hessian(const Poly<Rational>&);
template Poly<GaussianRational> hessian(const Poly<GaussianRational>&);
template Poly<BigComplex> hessian(const Poly<BigComplex>&);
template Rational aronhold(const Poly<Rational>&);
template GaussianRational aronhold(const Poly<GaussianRational>&);
template BigComplex aronhold(const Poly<BigComplex>&);

}  // namespace waring
