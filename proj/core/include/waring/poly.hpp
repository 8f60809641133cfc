#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "waring/error.hpp"
#include "waring/scalar.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Monomial: dense exponent vector. Ordered by graded lex (degree first, then
// lex with earlier variables larger); the library iterates maps in
// descending order so the leading term prints first.
// ---------------------------------------------------------------------------

struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial unit(int nvars, int var, int power = 1) {
        std::vector<int> e(nvars, 0);
        e[var] = power;
        return Monomial(std::move(e));
    }
    static Monomial constant(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int nvars() const { return static_cast<int>(exponents.size()); }
    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] += o.exponents[i];
        return r;
    }
    /// Componentwise difference; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < exponents.size(); ++i) r.exponents[i] -= o.exponents[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] > o.exponents[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

/// Graded-lex, larger first: higher degree wins, ties broken lexicographically
/// with x0 > x1 > ...
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents > b.exponents;
    }
};

std::vector<Monomial> monomials_of_degree(int nvars, int degree);
long long monomial_count(int nvars, int degree);  // C(nvars + degree - 1, degree)

// ---------------------------------------------------------------------------
// LinearForm: coefficient vector of a degree-1 form.
// ---------------------------------------------------------------------------

template <Scalar F>
struct LinearForm {
    std::vector<F> coefficients;

    LinearForm() = default;
    explicit LinearForm(std::vector<F> c) : coefficients(std::move(c)) {}

    int nvars() const { return static_cast<int>(coefficients.size()); }
    bool is_zero() const {
        return std::all_of(coefficients.begin(), coefficients.end(),
                           [](const F& c) { return c.is_zero(); });
    }
};

// ---------------------------------------------------------------------------
// Poly: sparse homogeneous polynomial over a scalar field F. Zero
// coefficients are never stored; every stored monomial has degree = degree().
// Values are immutable in practice: all operations return new polynomials.
// ---------------------------------------------------------------------------

template <Scalar F>
class Poly {
  public:
    using TermMap = std::map<Monomial, F, GrlexDescending>;

    Poly() : nvars_(0), degree_(0) {}
    Poly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (nvars < 0 || degree < 0) throw PreconditionError("Poly: bad dimensions");
    }

    static Poly zero(int nvars, int degree) { return Poly(nvars, degree); }

    static Poly monomial(int nvars, Monomial m, F coeff) {
        Poly p(nvars, m.degree());
        if (m.nvars() != nvars) throw PreconditionError("Poly: monomial arity mismatch");
        if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
        return p;
    }

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    F coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? FieldTraits<F>::zero() : it->second;
    }

    void add_term(const Monomial& m, const F& c) {
        if (m.nvars() != nvars_) throw PreconditionError("Poly: term arity mismatch");
        if (m.degree() != degree_) throw PreconditionError("Poly: inhomogeneous term");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        require_same_shape(o, true);
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        require_same_shape(o, true);
        Poly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r(nvars_, degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Poly scaled(const F& s) const {
        Poly r(nvars_, degree_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) {
            F v = c * s;
            if (!v.is_zero()) r.terms_.emplace(m, std::move(v));
        }
        return r;
    }
    Poly operator*(const Poly& o) const {
        require_same_shape(o, false);
        Poly r(nvars_, degree_ + o.degree_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    bool operator==(const Poly& o) const
        requires ExactScalar<F>
    {
        return nvars_ == o.nvars_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

    /// Partial derivative with respect to one variable.
    Poly diff(int var) const {
        if (var < 0 || var >= nvars_) throw PreconditionError("diff: variable out of range");
        if (degree_ == 0) return Poly(nvars_, 0);
        Poly r(nvars_, degree_ - 1);
        for (const auto& [m, c] : terms_) {
            int e = m.exponents[var];
            if (e == 0) continue;
            Monomial dm = m;
            dm.exponents[var] = e - 1;
            r.add_term(dm, c * FieldTraits<F>::from_rational(Rational(e)));
        }
        return r;
    }

    /// Evaluate at a point (for cross-checks).
    F evaluate(const std::vector<F>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw PreconditionError("evaluate: wrong point arity");
        F acc = FieldTraits<F>::zero();
        for (const auto& [m, c] : terms_) {
            F t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < m.exponents[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

  private:
    void require_same_shape(const Poly& o, bool same_degree) const {
        if (nvars_ != o.nvars_) throw PreconditionError("Poly: variable count mismatch");
        if (same_degree && degree_ != o.degree_) throw PreconditionError("Poly: degree mismatch");
    }

    int nvars_;
    int degree_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Falling factorial e * (e-1) * ... * (e-k+1).
long long falling_factorial(int e, int k);

/// Multinomial coefficient d! / prod(e_i!) for an exponent vector summing to d.
Rational multinomial(int d, const std::vector<int>& e);

/// l^d expanded; coefficient of exponent vector e is multinomial(d; e) * prod l_i^{e_i}.
template <Scalar F>
Poly<F> power_of_linear(const LinearForm<F>& l, int d) {
    if (d < 1) throw PreconditionError("power_of_linear: degree must be >= 1");
    int n = l.nvars();
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (!l.coefficients[i].is_zero()) support.push_back(i);

    Poly<F> result(n, d);
    if (support.empty()) return result;

    // Enumerate compositions of d over the support.
    size_t k = support.size();
    std::vector<int> comp(k, 0);
    auto emit = [&]() {
        F coeff = FieldTraits<F>::one();
        std::vector<int> full(n, 0);
        for (size_t j = 0; j < k; ++j) {
            full[support[j]] = comp[j];
            for (int v = 0; v < comp[j]; ++v) coeff = coeff * l.coefficients[support[j]];
        }
        coeff = coeff * FieldTraits<F>::from_rational(multinomial(d, full));
        result.add_term(Monomial(std::move(full)), coeff);
    };
    auto rec = [&](auto&& self, size_t pos, int remaining) -> void {
        if (pos + 1 == k) {
            comp[pos] = remaining;
            emit();
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            comp[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, d);
    return result;
}

/// Contraction of f by a dual polynomial q (iterated partial differentiation,
/// no 1/d! normalization): contract(q1*q2, f) = contract(q1, contract(q2, f)).
template <Scalar F>
Poly<F> contract(const Poly<F>& q, const Poly<F>& f) {
    if (q.nvars() != f.nvars()) throw PreconditionError("contract: variable count mismatch");
    if (q.degree() > f.degree()) throw PreconditionError("contract: dual degree exceeds degree");
    Poly<F> r(f.nvars(), f.degree() - q.degree());
    for (const auto& [mu, c] : q.terms()) {
        for (const auto& [m, a] : f.terms()) {
            if (!mu.divides(m)) continue;
            long long scale = 1;
            for (int i = 0; i < m.nvars(); ++i)
                scale *= falling_factorial(m.exponents[i], mu.exponents[i]);
            r.add_term(m / mu, c * a * FieldTraits<F>::from_rational(Rational(scale)));
        }
    }
    return r;
}

/// Substitute each variable of f by a linear form in a (possibly different)
/// variable count. Exact expansion; degree is preserved.
template <Scalar F>
Poly<F> substitute(const Poly<F>& f, const std::vector<LinearForm<F>>& images) {
    if (static_cast<int>(images.size()) != f.nvars())
        throw PreconditionError("substitute: need one image per variable");
    int m = images.empty() ? 0 : images[0].nvars();
    for (const auto& l : images)
        if (l.nvars() != m) throw PreconditionError("substitute: image arity mismatch");

    Poly<F> result(m, f.degree());
    for (const auto& [mon, c] : f.terms()) {
        bool dead = false;
        Poly<F> term = Poly<F>::monomial(m, Monomial::constant(m), c);
        for (int i = 0; i < f.nvars() && !dead; ++i) {
            int e = mon.exponents[i];
            if (e == 0) continue;
            if (images[i].is_zero()) {
                dead = true;
                break;
            }
            Poly<F> img = power_of_linear(images[i], e);
            term = term * img;
            if (term.is_zero()) dead = true;
        }
        if (dead) continue;
        result = result + term;
    }
    return result;
}

// --- binary forms -----------------------------------------------------------

/// Homogeneous gcd of two nonzero binary forms, normalized so that the leading
/// coefficient under graded lex is 1.
template <ExactScalar F>
Poly<F> gcd_binary(const Poly<F>& f, const Poly<F>& g);

/// True iff the binary form has no repeated linear factor: gcd(f, df/dx, df/dy)
/// is a nonzero constant.
template <ExactScalar F>
bool square_free(const Poly<F>& f);

// --- printing ---------------------------------------------------------------

std::vector<std::string> default_variable_names(int nvars);

template <Scalar F>
std::string poly_to_string(const Poly<F>& f, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != f.nvars())
        throw PreconditionError("poly_to_string: name count mismatch");
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::string cs = scalar_to_string(c);
        bool negated = false;
        if (!first && cs.size() > 1 && cs[0] == '-' &&
            cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (!first) out += negated ? " - " : " + ";
        std::string vars;
        for (int i = 0; i < f.nvars(); ++i) {
            int e = m.exponents[i];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        bool coeff_is_plain_one = (cs == "1");
        if (vars.empty()) {
            out += cs;
        } else if (coeff_is_plain_one) {
            out += vars;
        } else if (cs.find('+') != std::string::npos ||
                   (cs.find('-') != std::string::npos && cs.rfind('-') > 0)) {
            out += "(" + cs + ")*" + vars;  // gaussian with two components
        } else {
            out += cs + "*" + vars;
        }
        first = false;
    }
    return out;
}

template <Scalar F>
std::string poly_to_string(const Poly<F>& f) {
    return poly_to_string(f, default_variable_names(f.nvars()));
}

}  // namespace waring
