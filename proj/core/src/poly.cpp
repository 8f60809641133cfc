#include "waring/poly.hpp"

namespace waring {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos + 1 == nvars) {
            e[pos] = remaining;
            out.push_back(Monomial(e));
            return;
        }
        for (int v = remaining; v >= 0; --v) {  // descending grlex within fixed degree
            e[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, degree);
    return out;
}

long long monomial_count(int nvars, int degree) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), nvars + degree - 1, degree);
    if (!c.fits_slong_p()) throw LimitError("monomial_count: overflow");
    return c.get_si();
}

long long falling_factorial(int e, int k) {
    long long r = 1;
    for (int j = 0; j < k; ++j) r *= (e - j);
    return r;
}

Rational multinomial(int d, const std::vector<int>& e) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), d);
    for (int x : e) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), x);
        num /= f;
    }
    return Rational(num);
}

std::vector<std::string> default_variable_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

// --- binary gcd / square-free -----------------------------------------------

namespace {

// Dense univariate coefficients c[0] + c[1] x + ... for the dehomogenization
// f(x, 1) of a binary form.
template <ExactScalar F>
std::vector<F> dehomogenize(const Poly<F>& f) {
    std::vector<F> c(f.degree() + 1, FieldTraits<F>::zero());
    for (const auto& [m, a] : f.terms()) c[m.exponents[0]] = a;
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

template <ExactScalar F>
int uni_degree(const std::vector<F>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

template <ExactScalar F>
std::vector<F> uni_rem(std::vector<F> a, const std::vector<F>& b) {
    int db = uni_degree(b);
    for (int da = uni_degree(a); da >= db && da >= 0; da = uni_degree(a)) {
        F q = a[da] * b[db].inv();
        for (int i = 0; i <= db; ++i) a[da - db + i] = a[da - db + i] - q * b[i];
        a[da] = FieldTraits<F>::zero();
    }
    return a;
}

template <ExactScalar F>
std::vector<F> uni_gcd(std::vector<F> a, std::vector<F> b) {
    while (uni_degree(b) >= 0) {
        auto r = uni_rem(std::move(a), b);
        a = b;
        b = std::move(r);
    }
    int da = uni_degree(a);
    if (da < 0) return a;
    F lead_inv = a[da].inv();
    for (auto& c : a) c = c * lead_inv;
    a.resize(da + 1);
    return a;
}

// Splits off the powers of x and y dividing f; g := f / (x^ax * y^ay).
template <ExactScalar F>
void split_axes(const Poly<F>& f, int& ax, int& ay, Poly<F>& g) {
    ax = f.degree();
    ay = f.degree();
    for (const auto& [m, c] : f.terms()) {
        ax = std::min(ax, m.exponents[0]);
        ay = std::min(ay, m.exponents[1]);
    }
    g = Poly<F>(2, f.degree() - ax - ay);
    for (const auto& [m, c] : f.terms())
        g.add_term(Monomial({m.exponents[0] - ax, m.exponents[1] - ay}), c);
}

}  // namespace

template <ExactScalar F>
Poly<F> gcd_binary(const Poly<F>& f, const Poly<F>& g) {
    if (f.nvars() != 2 || g.nvars() != 2)
        throw PreconditionError("gcd_binary: binary forms required");
    if (f.is_zero() || g.is_zero()) throw PreconditionError("gcd_binary: zero polynomial");

    int fx, fy, gx, gy;
    Poly<F> fc, gc;
    split_axes(f, fx, fy, fc);
    split_axes(g, gx, gy, gc);

    auto u = uni_gcd(dehomogenize(fc), dehomogenize(gc));
    int du = uni_degree(u);

    int hx = std::min(fx, gx), hy = std::min(fy, gy);
    Poly<F> result(2, du + hx + hy);
    for (int i = 0; i <= du; ++i)
        if (!u[i].is_zero()) result.add_term(Monomial({i + hx, du - i + hy}), u[i]);

    // Monic leading coefficient under graded lex.
    const auto& lead = result.terms().begin()->second;
    return result.scaled(lead.inv());
}

template <ExactScalar F>
bool square_free(const Poly<F>& f) {
    if (f.nvars() != 2) throw PreconditionError("square_free: binary form required");
    if (f.is_zero()) throw PreconditionError("square_free: zero polynomial");
    if (f.degree() <= 1) return true;
    Poly<F> fx = f.diff(0), fy = f.diff(1);
    // A vanishing partial means f is a pure power of the other variable.
    if (fx.is_zero() || fy.is_zero()) return false;
    // In characteristic zero a repeated linear factor of f divides both
    // partials, and conversely.
    return gcd_binary(fx, fy).degree() == 0;
}

template Poly<Rational> gcd_binary(const Poly<Rational>&, const Poly<Rational>&);
template Poly<GaussianRational> gcd_binary(const Poly<GaussianRational>&,
                                           const Poly<GaussianRational>&);
template bool square_free(const Poly<Rational>&);
template bool square_free(const Poly<GaussianRational>&);

}  // namespace waring
