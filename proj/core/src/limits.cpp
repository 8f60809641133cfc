#include "waring/limits.hpp"

#include <algorithm>

#include "waring/families.hpp"

namespace waring {

namespace {

UPoly up_const(long v) { return UPoly::constant(Rational(v)); }
UPoly up_const(Rational v) { return UPoly::constant(std::move(v)); }

// t^k * c
UPoly up_t(int k, Rational c) {
    std::vector<Rational> coeffs(k + 1, Rational::zero());
    coeffs[k] = std::move(c);
    return UPoly(std::move(coeffs));
}

std::vector<UPoly> zero_curve(int nvars) {
    return std::vector<UPoly>(nvars, UPoly());
}

}  // namespace

CurveFamily monomial_family(const std::vector<int>& tail, int d,
                            const std::vector<std::vector<Rational>>* lambdas) {
    const int n = static_cast<int>(tail.size());
    if (n < 1) throw PreconditionError("monomial_family: need at least one tail exponent");
    int tail_sum = 0;
    for (int b : tail) {
        if (b < 1) throw PreconditionError("monomial_family: tail exponents must be >= 1");
        tail_sum += b;
    }
    if (d <= tail_sum)
        throw PreconditionError("monomial_family: leading exponent d - sum(tail) must be >= 1");

    // Lambda table, defaulting to 0, 1, 2, ...; distinctness per level is the
    // genericity the construction needs.
    std::vector<std::vector<Rational>> table;
    if (lambdas) {
        table = *lambdas;
        if (static_cast<int>(table.size()) != n)
            throw PreconditionError("monomial_family: one lambda row per tail variable");
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(table[i].size()) != tail[i] + 1)
                throw PreconditionError("monomial_family: lambda row size must be b_i + 1");
            if (!table[i][0].is_zero())
                throw PreconditionError("monomial_family: lambda[i][0] must be 0");
            for (size_t a = 0; a < table[i].size(); ++a)
                for (size_t b = a + 1; b < table[i].size(); ++b)
                    if (table[i][a] == table[i][b])
                        throw PreconditionError(
                            "monomial_family: repeated lambda value (degenerate)");
        }
    } else {
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> row;
            for (int s = 0; s <= tail[i]; ++s) row.push_back(Rational(s));
            table.push_back(std::move(row));
        }
    }

    CurveFamily fam;
    fam.nvars = n + 1;
    fam.degree = d;

    std::vector<int> s(n, 0);
    while (true) {
        auto curve = zero_curve(n + 1);
        curve[0] = up_const(1);
        std::string label = "x0";
        for (int i = 0; i < n; ++i) {
            if (!table[i][s[i]].is_zero()) {
                curve[i + 1] = up_t(i + 1, table[i][s[i]]);
                label += " + " + table[i][s[i]].str() + "*t^" + std::to_string(i + 1) + "*x" +
                         std::to_string(i + 1);
            }
        }
        fam.curves.push_back(std::move(curve));
        fam.labels.push_back(std::move(label));
        // Lexicographic tuple successor.
        int pos = n - 1;
        while (pos >= 0 && s[pos] == tail[pos]) s[pos--] = 0;
        if (pos < 0) break;
        ++s[pos];
    }
    return fam;
}

LimitPlane limit_plane(const CurveFamily& fam) {
    if (fam.curves.empty()) throw PreconditionError("limit_plane: empty family");
    const int n = fam.nvars, d = fam.degree;
    auto rows = monomials_of_degree(n, d);

    Matrix<RatFun> m(static_cast<int>(rows.size()), static_cast<int>(fam.curves.size()),
                     RatFun::zero());
    for (size_t c = 0; c < fam.curves.size(); ++c) {
        if (static_cast<int>(fam.curves[c].size()) != n)
            throw PreconditionError("limit_plane: curve arity mismatch");
        LinearForm<RatFun> l;
        for (const auto& coord : fam.curves[c])
            l.coefficients.push_back(RatFun(coord, UPoly::constant(Rational::one())));
        Poly<RatFun> powered = power_of_linear(l, d);
        for (const auto& [mon, coeff] : powered.terms()) {
            auto it = std::lower_bound(rows.begin(), rows.end(), mon, GrlexDescending{});
            m.at(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = coeff;
        }
    }

    auto limit = limit_column_space(m);
    LimitPlane plane;
    plane.nvars = n;
    plane.degree = d;
    plane.vanishing_order = limit.vanishing_order;
    for (const auto& vec : limit.basis) {
        Poly<Rational> p(n, d);
        for (size_t r = 0; r < rows.size(); ++r)
            if (!vec[r].is_zero()) p.add_term(rows[r], vec[r]);
        plane.basis.push_back(std::move(p));
    }
    return plane;
}

bool contains(const LimitPlane& plane, const Poly<Rational>& f) {
    if (f.nvars() != plane.nvars || f.degree() != plane.degree)
        throw PreconditionError("contains: shape mismatch");
    auto rows = monomials_of_degree(plane.nvars, plane.degree);
    auto fill = [&](Matrix<Rational>& m, int col, const Poly<Rational>& p) {
        for (const auto& [mon, c] : p.terms()) {
            auto it = std::lower_bound(rows.begin(), rows.end(), mon, GrlexDescending{});
            m.at(static_cast<int>(it - rows.begin()), col) = c;
        }
    };
    const int k = static_cast<int>(plane.basis.size());
    Matrix<Rational> with(static_cast<int>(rows.size()), k + 1, Rational::zero());
    Matrix<Rational> without(static_cast<int>(rows.size()), k, Rational::zero());
    for (int c = 0; c < k; ++c) {
        fill(with, c, plane.basis[c]);
        fill(without, c, plane.basis[c]);
    }
    fill(with, k, f);
    return rank(with) == rank(without);
}

// ---------------------------------------------------------------------------
// Normal-form rows
// ---------------------------------------------------------------------------

namespace {

// Curves used by the small-rank rows, in up to five variables
// (x, y, z, w, u) = indices 0..4.
std::vector<UPoly> axis(int nvars, int var) {
    auto c = zero_curve(nvars);
    c[var] = up_const(1);
    return c;
}

// x + a t y + b t^2 z + c t^3 w (coefficients may be zero).
std::vector<UPoly> osculating(int nvars, long a, long b, long c) {
    auto curve = zero_curve(nvars);
    curve[0] = up_const(1);
    if (a) curve[1] = up_t(1, Rational(a));
    if (b) curve[2] = up_t(2, Rational(b));
    if (c) curve[3] = up_t(3, Rational(c));
    return curve;
}

Poly<Rational> mono(int nvars, std::vector<int> e, Rational c = Rational(1)) {
    return Poly<Rational>::monomial(nvars, Monomial(std::move(e)), std::move(c));
}

Poly<Rational> axis_power(int nvars, int var, int d) {
    std::vector<int> e(nvars, 0);
    e[var] = d;
    return mono(nvars, std::move(e));
}

// x^{d-1} y in nvars variables (indices 0 and second).
Poly<Rational> tangent_poly(int nvars, int first, int second, int d) {
    std::vector<int> e(nvars, 0);
    e[first] = d - 1;
    e[second] = 1;
    return mono(nvars, std::move(e));
}

std::vector<NormalFormRow> rank3_rows() {
    std::vector<NormalFormRow> rows;
    {
        NormalFormRow r;
        r.id = "r3.fermat";
        r.border_rank = 3;
        r.curves_text = "x, y, z";
        r.normal_form_text = "x^(d)+y^(d)+z^(d)";
        r.rank_range = "R = 3";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 3;
            f.degree = d;
            f.curves = {axis(3, 0), axis(3, 1), axis(3, 2)};
            f.labels = {"x", "y", "z"};
            return f;
        };
        r.target = [](int d) {
            return axis_power(3, 0, d) + axis_power(3, 1, d) + axis_power(3, 2, d);
        };
        rows.push_back(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r3.tangent_plus_cube";
        r.border_rank = 3;
        r.curves_text = "x, x + t*y, z";
        r.normal_form_text = "x^(d-1)*y + z^(d)";
        r.rank_range = "d <= R <= d+1";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 3;
            f.degree = d;
            f.curves = {axis(3, 0), osculating(3, 1, 0, 0), axis(3, 2)};
            f.labels = {"x", "x + t*y", "z"};
            return f;
        };
        r.target = [](int d) { return tangent_poly(3, 0, 1, d) + axis_power(3, 2, d); };
        rows.push_back(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r3.osculating";
        r.border_rank = 3;
        r.curves_text = "x, x + t*y, x + 2*t*y + t^2*z";
        r.normal_form_text = "x^(d-2)*y^2 + x^(d-1)*z";
        r.rank_range = "d <= R <= 2d-1";
        r.derived = true;
        r.note = "z carries the solved weight 1/(d-1) inside the limit plane";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 3;
            f.degree = d;
            f.curves = {axis(3, 0), osculating(3, 1, 0, 0), osculating(3, 2, 1, 0)};
            f.labels = {"x", "x + t*y", "x + 2*t*y + t^2*z"};
            return f;
        };
        r.target = [](int d) {
            return mono(3, {d - 2, 2, 0}) + mono(3, {d - 1, 0, 1}, Rational(1, d - 1));
        };
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<NormalFormRow> rank4_rows() {
    std::vector<NormalFormRow> rows;
    auto add = [&](NormalFormRow r) { rows.push_back(std::move(r)); };
    {
        NormalFormRow r;
        r.id = "r4.fermat";
        r.border_rank = 4;
        r.curves_text = "x, y, z, w";
        r.normal_form_text = "x^(d)+y^(d)+z^(d)+w^(d)";
        r.rank_range = "R = 4";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 4;
            f.degree = d;
            f.curves = {axis(4, 0), axis(4, 1), axis(4, 2), axis(4, 3)};
            f.labels = {"x", "y", "z", "w"};
            return f;
        };
        r.target = [](int d) {
            return axis_power(4, 0, d) + axis_power(4, 1, d) + axis_power(4, 2, d) +
                   axis_power(4, 3, d);
        };
        add(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r4.tangent_plus_two_cubes";
        r.border_rank = 4;
        r.curves_text = "x, x + t*y, z, w";
        r.normal_form_text = "x^(d-1)*y + z^(d) + w^(d)";
        r.rank_range = "d <= R <= d+2";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 4;
            f.degree = d;
            f.curves = {axis(4, 0), osculating(4, 1, 0, 0), axis(4, 2), axis(4, 3)};
            f.labels = {"x", "x + t*y", "z", "w"};
            return f;
        };
        r.target = [](int d) {
            return tangent_poly(4, 0, 1, d) + axis_power(4, 2, d) + axis_power(4, 3, d);
        };
        add(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r4.two_tangents";
        r.border_rank = 4;
        r.curves_text = "x, x + t*y, z, z + t*w";
        r.normal_form_text = "x^(d-1)*y + z^(d-1)*w";
        r.rank_range = "d <= R <= 2d";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 4;
            f.degree = d;
            auto zw = zero_curve(4);
            zw[2] = up_const(1);
            zw[3] = up_t(1, Rational(1));
            f.curves = {axis(4, 0), osculating(4, 1, 0, 0), axis(4, 2), zw};
            f.labels = {"x", "x + t*y", "z", "z + t*w"};
            return f;
        };
        r.target = [](int d) { return tangent_poly(4, 0, 1, d) + tangent_poly(4, 2, 3, d); };
        add(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r4.split_square";
        r.border_rank = 4;
        r.curves_text = "x, x + t*y, x + t*y + t^2*z, x + t^2*z";
        r.normal_form_text = "x^(d-2)*y*z";
        r.rank_range = "d <= R <= 2d-2";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 4;
            f.degree = d;
            auto c3 = zero_curve(4);
            c3[0] = up_const(1);
            c3[1] = up_t(1, Rational(1));
            c3[2] = up_t(2, Rational(1));
            auto c4 = zero_curve(4);
            c4[0] = up_const(1);
            c4[2] = up_t(2, Rational(1));
            f.curves = {axis(4, 0), osculating(4, 1, 0, 0), c3, c4};
            f.labels = {"x", "x + t*y", "x + t*y + t^2*z", "x + t^2*z"};
            return f;
        };
        r.target = [](int d) { return mono(4, {d - 2, 1, 1, 0}); };
        add(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r4.osculating_plus_cube";
        r.border_rank = 4;
        r.curves_text = "x, x + t*y, x + 2*t*y + t^2*z, w";
        r.normal_form_text = "x^(d-2)*y^2 + x^(d-1)*z + w^(d)";
        r.rank_range = "d <= R <= 2d";
        r.derived = true;
        r.note = "third curve needs the distinct tangent weight 2t; z carries 1/(d-1)";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 4;
            f.degree = d;
            f.curves = {axis(4, 0), osculating(4, 1, 0, 0), osculating(4, 2, 1, 0), axis(4, 3)};
            f.labels = {"x", "x + t*y", "x + 2*t*y + t^2*z", "w"};
            return f;
        };
        r.target = [](int d) {
            return mono(4, {d - 2, 2, 0, 0}) + mono(4, {d - 1, 0, 1, 0}, Rational(1, d - 1)) +
                   axis_power(4, 3, d);
        };
        add(std::move(r));
    }
    {
        NormalFormRow r;
        r.id = "r4.deep_osculating";
        r.border_rank = 4;
        r.curves_text = "x, x + t*y, x + 2*t*y + t^2*z, x + 3*t*y + 3*t^2*z + t^3*w";
        r.normal_form_text = "x^(d-3)*y^3 + x^(d-2)*y*z + x^(d-1)*w";
        r.rank_range = "d <= R <= 3d-3";
        r.derived = true;
        r.note =
            "the deepest four-curve collision forces the y*z cross term (a pure z^2 "
            "term cannot appear at this depth); weights solved exactly";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 4;
            f.degree = d;
            f.curves = {axis(4, 0), osculating(4, 1, 0, 0), osculating(4, 2, 1, 0),
                        osculating(4, 3, 3, 1)};
            f.labels = {"x", "x + t*y", "x + 2*t*y + t^2*z",
                        "x + 3*t*y + 3*t^2*z + t^3*w"};
            return f;
        };
        r.target = [](int d) {
            // The depth-three element: (d-1)(d-2) y^3 x^{d-3} + 3(d-1) y z x^{d-2}
            // + w x^{d-1}, rescaled to unit leading weight.
            return mono(4, {d - 3, 3, 0, 0}) +
                   mono(4, {d - 2, 1, 1, 0}, Rational(3, d - 2)) +
                   mono(4, {d - 1, 0, 0, 1}, Rational(1, (d - 1) * (d - 2)));
        };
        add(std::move(r));
    }
    return rows;
}

std::vector<NormalFormRow> rank5_rows() {
    std::vector<NormalFormRow> rows;
    // Six rows: a constant fifth direction added to each rank-4 row.
    for (auto& base : rank4_rows()) {
        NormalFormRow r;
        r.id = "r5." + base.id.substr(3) + "_plus_cube";
        r.border_rank = 5;
        r.min_degree = base.min_degree;
        r.curves_text = base.curves_text + ", u";
        r.normal_form_text = base.normal_form_text + " + u^(d)";
        r.rank_range = base.rank_range + " shifted by the added power";
        r.derived = base.derived;
        r.note = base.note;
        auto base_family = base.family;
        auto base_target = base.target;
        r.family = [base_family](int d) {
            CurveFamily f = base_family(d);
            f.nvars = 5;
            for (auto& c : f.curves) c.push_back(UPoly());
            f.curves.push_back(axis(5, 4));
            f.labels.push_back("u");
            return f;
        };
        r.target = [base_target](int d) {
            Poly<Rational> base4 = base_target(d);
            Poly<Rational> lifted(5, d);
            for (const auto& [m, c] : base4.terms()) {
                std::vector<int> e = m.exponents;
                e.push_back(0);
                lifted.add_term(Monomial(std::move(e)), c);
            }
            return lifted + axis_power(5, 4, d);
        };
        rows.push_back(std::move(r));
    }
    {
        // Depth-four osculating flag with binomial weights.
        NormalFormRow r;
        r.id = "r5.deep_osculating";
        r.border_rank = 5;
        r.min_degree = 4;
        r.curves_text =
            "x, x + t*y, x + 2*t*y + t^2*z, x + 3*t*y + 3*t^2*z + t^3*w, "
            "x + 4*t*y + 6*t^2*z + 4*t^3*w + t^4*u";
        r.normal_form_text =
            "y^4, y^2*z, z^2, y*w, u block against powers of x (solved element)";
        r.rank_range = "";
        r.derived = true;
        r.note = "fourth finite difference of the binomial flag; weights solved exactly";
        r.family = [](int d) {
            CurveFamily f;
            f.nvars = 5;
            f.degree = d;
            auto c5 = zero_curve(5);
            c5[0] = up_const(1);
            c5[1] = up_t(1, Rational(4));
            c5[2] = up_t(2, Rational(6));
            c5[3] = up_t(3, Rational(4));
            c5[4] = up_t(4, Rational(1));
            auto lift = [](std::vector<UPoly> c) {
                c.push_back(UPoly());
                return c;
            };
            f.curves = {lift(axis(4, 0)), lift(osculating(4, 1, 0, 0)),
                        lift(osculating(4, 2, 1, 0)), lift(osculating(4, 3, 3, 1)), c5};
            f.labels = {"x", "x + t*y", "x + 2*t*y + t^2*z",
                        "x + 3*t*y + 3*t^2*z + t^3*w",
                        "x + 4*t*y + 6*t^2*z + 4*t^3*w + t^4*u"};
            return f;
        };
        r.target = [](int d) {
            // 24 C(d,4) y^4 x^{d-4} + 6 d(d-1)(d-2) y^2 z x^{d-3}
            // + 6 C(d,2) z^2 x^{d-2} + 4 d(d-1) y w x^{d-2} + d u x^{d-1}.
            auto C = [](long a, long b) {
                Rational r(1);
                for (long i = 0; i < b; ++i) r = r * Rational(a - i) / Rational(i + 1);
                return r;
            };
            Rational dd(d);
            return mono(5, {d - 4, 4, 0, 0, 0}, Rational(24) * C(d, 4)) +
                   mono(5, {d - 3, 2, 1, 0, 0}, Rational(6 * d * (d - 1) * (d - 2))) +
                   mono(5, {d - 2, 0, 2, 0, 0}, Rational(6) * C(d, 2)) +
                   mono(5, {d - 2, 1, 0, 1, 0}, Rational(4 * d * (d - 1))) +
                   mono(5, {d - 1, 0, 0, 0, 1}, dd);
        };
        rows.push_back(std::move(r));
    }
    {
        // Degree-3 exception: five coincident base directions in the plane.
        NormalFormRow r;
        r.id = "r5.crossed_squares";
        r.border_rank = 5;
        r.min_degree = 3;
        r.only_degree = 3;
        r.curves_text =
            "x + t*(u - z/2)/3, y + t*(v - z/2)/18, (x+y) - t*z/18, x + 2*y, x + 3*y";
        r.normal_form_text = "x^2*u + y^2*v + x*y*z";
        r.rank_range = "8 <= R <= 9";
        r.derived = true;
        r.note = "curve coefficients solved so the membership is exact";
        r.family = [](int) { return five_curve_family(); };
        r.target = [](int) {
            // Variables here are (x, y, z, u, v).
            return two_squares_plus_cross_poly();
        };
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

CurveFamily five_curve_family() {
    // Variables (x, y, z, u, v).
    CurveFamily f;
    f.nvars = 5;
    f.degree = 3;
    auto a = zero_curve(5);
    a[0] = up_const(1);
    a[2] = up_t(1, Rational(-1, 6));
    a[3] = up_t(1, Rational(1, 3));
    auto b = zero_curve(5);
    b[1] = up_const(1);
    b[2] = up_t(1, Rational(-1, 36));
    b[4] = up_t(1, Rational(1, 18));
    auto c = zero_curve(5);
    c[0] = up_const(1);
    c[1] = up_const(1);
    c[2] = up_t(1, Rational(-1, 18));
    auto dcurve = zero_curve(5);
    dcurve[0] = up_const(1);
    dcurve[1] = up_const(2);
    auto e = zero_curve(5);
    e[0] = up_const(1);
    e[1] = up_const(3);
    f.curves = {a, b, c, dcurve, e};
    f.labels = {"x + t*(u/3 - z/6)", "y + t*(v/18 - z/36)", "(x+y) - t*z/18", "x + 2*y",
                "x + 3*y"};
    return f;
}

std::vector<NormalFormRow> normal_form_families(int r) {
    switch (r) {
        case 3: return rank3_rows();
        case 4: return rank4_rows();
        case 5: return rank5_rows();
        default:
            throw PreconditionError("normal_form_families: rank must be 3, 4 or 5");
    }
}

}  // namespace waring
