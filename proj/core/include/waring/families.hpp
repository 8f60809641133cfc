#pragma once

#include "waring/poly.hpp"

namespace waring {

// Named polynomials that recur across the bound sources, the decomposition
// catalog and the table reproductions.

inline Poly<Rational> monomial_poly(const std::vector<int>& exponents) {
    Monomial m(exponents);
    return Poly<Rational>::monomial(m.nvars(), m, Rational::one());
}

/// x_1 * x_2 * ... * x_n.
inline Poly<Rational> product_poly(int n) {
    return monomial_poly(std::vector<int>(n, 1));
}

/// x_1 y_1 z_1 + ... + x_m y_m z_m in 3m variables (block i uses 3i..3i+2).
inline Poly<Rational> triple_blocks_poly(int m) {
    Poly<Rational> f(3 * m, 3);
    for (int i = 0; i < m; ++i) {
        std::vector<int> e(3 * m, 0);
        e[3 * i] = e[3 * i + 1] = e[3 * i + 2] = 1;
        f.add_term(Monomial(std::move(e)), Rational::one());
    }
    return f;
}

/// x (y_1^2 + ... + y_m^2) in m+1 variables; variable 0 is x.
inline Poly<Rational> line_times_quadric_poly(int m) {
    Poly<Rational> f(m + 1, 3);
    for (int i = 1; i <= m; ++i) {
        std::vector<int> e(m + 1, 0);
        e[0] = 1;
        e[i] = 2;
        f.add_term(Monomial(std::move(e)), Rational::one());
    }
    return f;
}

/// x (y_1^2 + ... + y_m^2) + x^3.
inline Poly<Rational> line_times_quadric_plus_cube_poly(int m) {
    Poly<Rational> f = line_times_quadric_poly(m);
    std::vector<int> e(m + 1, 0);
    e[0] = 3;
    f.add_term(Monomial(std::move(e)), Rational::one());
    return f;
}

/// x^2 u + y^2 v + x y z in 5 variables ordered (x, y, z, u, v).
inline Poly<Rational> two_squares_plus_cross_poly() {
    Poly<Rational> f(5, 3);
    f.add_term(Monomial({2, 0, 0, 1, 0}), Rational::one());
    f.add_term(Monomial({0, 2, 0, 0, 1}), Rational::one());
    f.add_term(Monomial({1, 1, 1, 0, 0}), Rational::one());
    return f;
}

// Ternary cubic normal forms, variables (x, y, z).
inline Poly<Rational> cubic_from_terms(
    const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
    Poly<Rational> f(3, 3);
    for (const auto& [e, c] : terms) f.add_term(Monomial(e), c);
    return f;
}

inline Poly<Rational> cubic_triple_line() {  // x^3
    return cubic_from_terms({{{3, 0, 0}, Rational(1)}});
}
inline Poly<Rational> cubic_concurrent_lines() {  // x y (x + y)
    return cubic_from_terms({{{2, 1, 0}, Rational(1)}, {{1, 2, 0}, Rational(1)}});
}
inline Poly<Rational> cubic_double_line_plus_line() {  // x^2 y
    return cubic_from_terms({{{2, 1, 0}, Rational(1)}});
}
inline Poly<Rational> cubic_three_cube_curve() {  // y^2 z - x^3 - z^3
    return cubic_from_terms({{{0, 2, 1}, Rational(1)}, {{3, 0, 0}, Rational(-1)},
                             {{0, 0, 3}, Rational(-1)}});
}
inline Poly<Rational> cubic_harmonic_curve() {  // y^2 z - x^3 - x z^2
    return cubic_from_terms({{{0, 2, 1}, Rational(1)}, {{3, 0, 0}, Rational(-1)},
                             {{1, 0, 2}, Rational(-1)}});
}
inline Poly<Rational> cubic_cusp() {  // y^2 z - x^3
    return cubic_from_terms({{{0, 2, 1}, Rational(1)}, {{3, 0, 0}, Rational(-1)}});
}
inline Poly<Rational> cubic_triangle() {  // x y z
    return cubic_from_terms({{{1, 1, 1}, Rational(1)}});
}
inline Poly<Rational> cubic_conic_plus_transversal() {  // x (x^2 + y z)
    return cubic_from_terms({{{3, 0, 0}, Rational(1)}, {{1, 1, 1}, Rational(1)}});
}
inline Poly<Rational> cubic_general_weierstrass(const Rational& a) {  // y^2 z - x^3 - a x z^2 - z^3
    return cubic_from_terms({{{0, 2, 1}, Rational(1)}, {{3, 0, 0}, Rational(-1)},
                             {{1, 0, 2}, -a}, {{0, 0, 3}, Rational(-1)}});
}
inline Poly<Rational> cubic_conic_plus_tangent() {  // y (x^2 + y z)
    return cubic_from_terms({{{2, 1, 0}, Rational(1)}, {{0, 2, 1}, Rational(1)}});
}
inline Poly<Rational> cubic_fermat() {  // x^3 + y^3 + z^3
    return cubic_from_terms({{{3, 0, 0}, Rational(1)}, {{0, 3, 0}, Rational(1)},
                             {{0, 0, 3}, Rational(1)}});
}

}  // namespace waring
