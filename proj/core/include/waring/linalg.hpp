#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/error.hpp"
#include "waring/scalar.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Matrix: dense row-major over an exact scalar field.
// ---------------------------------------------------------------------------

template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, F fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const F& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, data_.empty() ? F() : data_[0]);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

  private:
    int rows_, cols_;
    std::vector<F> data_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    int rank = 0;
    std::vector<int> pivot_columns;  // strictly increasing
};

/// Reduced row echelon form over an exact field. Pivoting is deterministic:
/// the first nonzero entry in column order.
template <ExactScalar F>
RrefResult<F> rref(Matrix<F> m) {
    const int rows = m.rows(), cols = m.cols();
    RrefResult<F> out;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r)
            if (!m.at(r, pc).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(pr, c));
        F inv = m.at(pr, pc).inv();
        for (int c = pc; c < cols; ++c) m.at(pr, c) = m.at(pr, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || m.at(r, pc).is_zero()) continue;
            F factor = m.at(r, pc);
            for (int c = pc; c < cols; ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(pr, c);
        }
        out.pivot_columns.push_back(pc);
        ++pr;
    }
    out.rank = pr;
    out.reduced = std::move(m);
    return out;
}

// Fraction-free Bareiss rank for rational matrices; intermediate entries stay
// integral, which bounds coefficient swell on the large catalecticants.
int rank_bareiss(const Matrix<Rational>& m);

template <ExactScalar F>
int rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, Rational>) {
        return rank_bareiss(m);
    } else {
        return rref(m).rank;
    }
}

/// Basis of the right null space {v : m v = 0}; size cols - rank.
template <ExactScalar F>
std::vector<std::vector<F>> kernel(const Matrix<F>& m) {
    auto r = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : r.pivot_columns) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(cols, FieldTraits<F>::zero());
        v[free] = FieldTraits<F>::one();
        for (size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = -r.reduced.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// UPoly: dense univariate polynomial in t over Rational. RatFun: its field of
// fractions with monic, coprime denominator. Poles at t = 0 are legal and
// tracked through valuations.
// ---------------------------------------------------------------------------

class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    static UPoly constant(Rational v) { return UPoly({std::move(v)}); }
    static UPoly t(int power = 1) {
        std::vector<Rational> c(power + 1, Rational::zero());
        c.back() = Rational::one();
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coefficient(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational::zero();
    }
    /// Order of vanishing at t = 0; throws on the zero polynomial.
    int valuation() const;
    Rational eval0() const { return coefficient(0); }
    Rational leading() const { return is_zero() ? Rational::zero() : c_.back(); }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator-() const;
    /// Quotient and remainder; o nonzero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b);  // monic
    UPoly shifted_down(int k) const;     // divide by t^k; caller guarantees valuation >= k
    UPoly monic() const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

class RatFun {
  public:
    RatFun() : num_(), den_(UPoly::constant(Rational::one())) {}
    RatFun(UPoly num, UPoly den);
    RatFun(Rational v) : RatFun(UPoly::constant(std::move(v)), UPoly::constant(Rational::one())) {}
    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Rational::one()); }
    static RatFun t() { return RatFun(UPoly::t(), UPoly::constant(Rational::one())); }
    static RatFun from_rational(const Rational& q) { return RatFun(q); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;
    RatFun inv() const;

    /// t-adic valuation; may be negative (pole at 0). Zero input throws.
    int valuation() const;
    /// Multiply by t^{-k}.
    RatFun shifted(int k) const;
    /// Value at t = 0; requires valuation() >= 0.
    Rational eval0() const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::string str() const;

  private:
    UPoly num_, den_;  // den monic, gcd(num, den) = 1
};

template <>
struct FieldTraits<RatFun> {
    static RatFun zero() { return RatFun::zero(); }
    static RatFun one() { return RatFun::one(); }
    static RatFun from_rational(const Rational& q) { return RatFun(q); }
    static constexpr bool exact = true;
    static constexpr const char* name = "ratfun";
};

// ---------------------------------------------------------------------------
// Limit of a column space as t -> 0.
// ---------------------------------------------------------------------------

struct LimitColumnSpace {
    /// Basis (over Rational) of lim_{t->0} of the column span;
    /// dimension equals the generic rank of the input.
    std::vector<std::vector<Rational>> basis;
    /// Total t-adic order cleared across the reduction; for a full-rank
    /// polynomial input this is the vanishing order of the wedge of columns.
    int vanishing_order = 0;
};

/// Columns must be linearly independent over the rational-function field;
/// a dependency aborts with a witness in the message. The limit is computed
/// by column reduction over the function field, clearing each column's
/// t-adic valuation, then evaluating at t = 0 — never by numeric sampling.
LimitColumnSpace limit_column_space(const Matrix<RatFun>& m);

}  // namespace waring
