#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <utility>

#include "waring/error.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Rational: arbitrary-precision rational, always stored reduced with a
// positive denominator. Equality is structural.
// ---------------------------------------------------------------------------

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw PreconditionError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Accepts "p" or "p/q" (q > 0 after reduction).
    static Rational parse(const std::string& text);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw PreconditionError("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inv() const {
        if (is_zero()) throw PreconditionError("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const;

  private:
    mpq_class v_;
};

// ---------------------------------------------------------------------------
// GaussianRational: Q(i). Conjugation is an involution; inverses go through
// the rational norm re^2 + im^2.
// ---------------------------------------------------------------------------

class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return {Rational(1)}; }

    /// Accepts the forms "p/q", "r/s*i" and "p/q+r/s*i" (also with '-').
    static GaussianRational parse(const std::string& text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    GaussianRational inv() const {
        if (is_zero()) throw PreconditionError("GaussianRational: inverse of zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inv(); }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Rational re_, im_;
};

// ---------------------------------------------------------------------------
// BigFloat / BigComplex: MPFR-backed binary floats. The precision (>= 64
// bits) travels with each value; binary operations round at the larger of
// the two operand precisions.
// ---------------------------------------------------------------------------

class BigFloat {
  public:
    static constexpr long kMinPrecision = 64;
    static constexpr long kDefaultPrecision = 256;

    explicit BigFloat(long precision = kDefaultPrecision);
    BigFloat(const Rational& q, long precision);
    BigFloat(double x, long precision);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long precision() const { return prec_; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& o) const;
    BigFloat operator-(const BigFloat& o) const;
    BigFloat operator*(const BigFloat& o) const;
    BigFloat operator/(const BigFloat& o) const;

    BigFloat abs() const;
    BigFloat sqrt() const;   // requires a nonnegative value
    BigFloat cbrt() const;
    static BigFloat pi(long precision);

    /// sin and cos of this value, both at its precision.
    std::pair<BigFloat, BigFloat> sin_cos() const;

    bool operator<(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator<=(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) <= 0; }
    bool operator==(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) == 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 30) const;

  private:
    static long clamp(long precision);
    mpfr_t v_;
    long prec_;
};

class BigComplex {
  public:
    explicit BigComplex(long precision = BigFloat::kDefaultPrecision)
        : re_(precision), im_(precision) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(const Rational& q, long precision) : re_(q, precision), im_(precision) {}

    static BigComplex zero(long precision = BigFloat::kDefaultPrecision) { return BigComplex(precision); }
    static BigComplex one(long precision = BigFloat::kDefaultPrecision) {
        return BigComplex(BigFloat(Rational(1), precision), BigFloat(precision));
    }
    static BigComplex i(long precision = BigFloat::kDefaultPrecision) {
        return BigComplex(BigFloat(precision), BigFloat(Rational(1), precision));
    }
    /// e^{2 pi i / k}, computed through the complex exponential.
    static BigComplex root_of_unity(unsigned long k, long precision = BigFloat::kDefaultPrecision);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    long precision() const { return std::max(re_.precision(), im_.precision()); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    BigComplex conj() const { return {re_, -im_}; }
    BigFloat abs() const;

    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex operator+(const BigComplex& o) const { return {re_ + o.re_, im_ + o.im_}; }
    BigComplex operator-(const BigComplex& o) const { return {re_ - o.re_, im_ - o.im_}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    BigComplex inv() const;
    BigComplex operator/(const BigComplex& o) const { return *this * o.inv(); }
    BigComplex& operator+=(const BigComplex& o) { *this = *this + o; return *this; }
    BigComplex& operator-=(const BigComplex& o) { *this = *this - o; return *this; }
    BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }

    /// |this - o| <= tol. This is the caller-supplied absolute tolerance of
    /// every approximate comparison in the library.
    bool approx_eq(const BigComplex& o, const BigFloat& tol) const;

    std::string str(int digits = 30) const;

  private:
    BigFloat re_, im_;
};

// Ring embeddings.
inline GaussianRational embed_gaussian(const Rational& q) { return GaussianRational(q); }
inline BigComplex embed_complex(const Rational& q, long precision = BigFloat::kDefaultPrecision) {
    return BigComplex(q, precision);
}
inline BigComplex embed_complex(const GaussianRational& z, long precision = BigFloat::kDefaultPrecision) {
    return {BigFloat(z.re(), precision), BigFloat(z.im(), precision)};
}

// ---------------------------------------------------------------------------
// The field abstraction the rest of the library is written against.
// ---------------------------------------------------------------------------

template <class F>
concept Scalar = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Exact fields support decidable equality and exact division; BigComplex is
/// deliberately excluded so rank-type decisions cannot run on floats.
template <class F>
concept ExactScalar = Scalar<F> && requires(const F a, const F b) {
    { a == b } -> std::convertible_to<bool>;
    { a.inv() } -> std::convertible_to<F>;
};

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero() { return Rational::zero(); }
    static Rational one() { return Rational::one(); }
    static Rational from_rational(const Rational& q) { return q; }
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
};

template <>
struct FieldTraits<GaussianRational> {
    static GaussianRational zero() { return GaussianRational::zero(); }
    static GaussianRational one() { return GaussianRational::one(); }
    static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
    static constexpr bool exact = true;
    static constexpr const char* name = "gaussian";
};

template <>
struct FieldTraits<BigComplex> {
    static BigComplex zero() { return BigComplex::zero(); }
    static BigComplex one() { return BigComplex::one(); }
    static BigComplex from_rational(const Rational& q) { return embed_complex(q); }
    static constexpr bool exact = false;
    static constexpr const char* name = "bigcomplex";
};

std::string scalar_to_string(const Rational& x);
std::string scalar_to_string(const GaussianRational& x);
std::string scalar_to_string(const BigComplex& x);

}  // namespace waring
