#include "waring/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace waring {

static bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s[0] == '+') s = s.substr(1);  // mpq rejects a leading '+'
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer_token(s)) throw ParseError("bad rational: '" + text + "'");
        return Rational(mpq_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("bad rational: '" + text + "'");
    mpq_class q(s);
    if (q.get_den() == 0) throw ParseError("bad rational (zero denominator): '" + text + "'");
    return Rational(q);
}

std::string Rational::str() const {
    return v_.get_str();
}

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty gaussian rational");

    // Split at the last top-level +/- that is not the leading sign.
    auto parse_part = [&](const std::string& part) -> std::pair<Rational, bool> {
        // Returns (value, is_imaginary).
        std::string p = part;
        bool imag = false;
        if (p.size() >= 2 && p.substr(p.size() - 2) == "*i") {
            imag = true;
            p = p.substr(0, p.size() - 2);
        } else if (!p.empty() && p.back() == 'i') {
            imag = true;
            p = p.substr(0, p.size() - 1);
            if (p.empty() || p == "+") p = "1";
            else if (p == "-") p = "-1";
        }
        return {Rational::parse(p), imag};
    };

    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            split = i;
            break;
        }
    }
    Rational re, im;
    if (split == std::string::npos) {
        auto [val, imag] = parse_part(s);
        (imag ? im : re) = val;
    } else {
        auto [a, a_imag] = parse_part(s.substr(0, split));
        std::string second = s.substr(split);  // keeps the sign
        auto [b, b_imag] = parse_part(second);
        if (a_imag == b_imag) throw ParseError("bad gaussian rational: '" + text + "'");
        (a_imag ? im : re) = a;
        (b_imag ? im : re) = b;
    }
    return {re, im};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "*i";
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.str() + "+" + imag;
    return re_.str() + imag;  // the '-' is carried by im_.str()
}

// --- BigFloat ---------------------------------------------------------------

long BigFloat::clamp(long precision) {
    return std::max(precision, kMinPrecision);
}

BigFloat::BigFloat(long precision) : prec_(clamp(precision)) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, long precision) : prec_(clamp(precision)) {
    mpfr_init2(v_, prec_);
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(double x, long precision) : prec_(clamp(precision)) {
    mpfr_init2(v_, prec_);
    mpfr_set_d(v_, x, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec_);
        prec_ = o.prec_;
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    std::swap(prec_, o.prec_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define WARING_BIGFLOAT_BINOP(op, fn)                          \
    BigFloat BigFloat::operator op(const BigFloat& o) const {  \
        BigFloat r(std::max(prec_, o.prec_));                  \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                         \
        return r;                                              \
    }

WARING_BIGFLOAT_BINOP(+, mpfr_add)
WARING_BIGFLOAT_BINOP(-, mpfr_sub)
WARING_BIGFLOAT_BINOP(*, mpfr_mul)
#undef WARING_BIGFLOAT_BINOP

BigFloat BigFloat::operator/(const BigFloat& o) const {
    if (o.is_zero()) throw PreconditionError("BigFloat: division by zero");
    BigFloat r(std::max(prec_, o.prec_));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const {
    if (sign() < 0) throw PreconditionError("BigFloat: sqrt of negative value");
    BigFloat r(prec_);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cbrt() const {
    BigFloat r(prec_);
    mpfr_cbrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long precision) {
    BigFloat r(precision);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::pair<BigFloat, BigFloat> BigFloat::sin_cos() const {
    BigFloat s(prec_), c(prec_);
    mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

std::string BigFloat::str(int digits) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits, v_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

// --- BigComplex -------------------------------------------------------------

BigComplex BigComplex::root_of_unity(unsigned long k, long precision) {
    if (k == 0) throw PreconditionError("root_of_unity: k must be positive");
    BigFloat angle = BigFloat::pi(precision) * BigFloat(Rational(2, static_cast<long>(k)), precision);
    auto [s, c] = angle.sin_cos();
    return {std::move(c), std::move(s)};
}

BigFloat BigComplex::abs() const {
    // hypot(re, im)
    BigFloat r = re_ * re_ + im_ * im_;
    return r.sqrt();
}

BigComplex BigComplex::inv() const {
    if (is_zero()) throw PreconditionError("BigComplex: inverse of zero");
    BigFloat n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

bool BigComplex::approx_eq(const BigComplex& o, const BigFloat& tol) const {
    return (*this - o).abs() <= tol;
}

std::string BigComplex::str(int digits) const {
    return re_.str(digits) + (im_.sign() < 0 ? "" : "+") + im_.str(digits) + "*i";
}

std::string scalar_to_string(const Rational& x) { return x.str(); }
std::string scalar_to_string(const GaussianRational& x) { return x.str(); }
std::string scalar_to_string(const BigComplex& x) { return x.str(); }

}  // namespace waring
