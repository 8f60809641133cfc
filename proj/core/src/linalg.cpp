#include "waring/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

int rank_bareiss(const Matrix<Rational>& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Scale each row to integers first.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < cols; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
        for (int c = 0; c < cols; ++c) {
            const Rational& q = m.at(r, c);
            a[r][c] = q.numerator() * (lcm / q.denominator());
        }
    }

    mpz_class prev = 1;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r)
            if (a[r][pc] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr) std::swap(a[pivot], a[pr]);
        for (int r = pr + 1; r < rows; ++r) {
            for (int c = pc + 1; c < cols; ++c) {
                mpz_class v = a[pr][pc] * a[r][c] - a[r][pc] * a[pr][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = v;
            }
            a[r][pc] = 0;
        }
        prev = a[pr][pc];
        ++pr;
    }
    return pr;
}

// --- UPoly --------------------------------------------------------------

int UPoly::valuation() const {
    if (is_zero()) throw PreconditionError("UPoly: valuation of zero");
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;  // unreachable
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational::zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational::zero());
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational::zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw PreconditionError("UPoly: division by zero");
    std::vector<Rational> rem(a.c_);
    std::vector<Rational> quo(std::max<int>(a.degree() - b.degree() + 1, 0), Rational::zero());
    int db = b.degree();
    for (int da = static_cast<int>(rem.size()) - 1; da >= db; --da) {
        if (rem[da].is_zero()) continue;
        Rational q = rem[da] / b.c_[db];
        quo[da - db] = q;
        for (int i = 0; i <= db; ++i) rem[da - db + i] -= q * b.c_[i];
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly UPoly::shifted_down(int k) const {
    if (k == 0) return *this;
    if (is_zero()) return *this;
    if (valuation() < k) throw PreconditionError("UPoly: shift below valuation");
    std::vector<Rational> c(c_.begin() + k, c_.end());
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = c_.back().inv();
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= inv;
    return UPoly(std::move(c));
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[i].str();
        if (i >= 1) out += "*t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

// --- RatFun -------------------------------------------------------------

RatFun::RatFun(UPoly num, UPoly den) {
    if (den.is_zero()) throw PreconditionError("RatFun: zero denominator");
    if (num.is_zero()) {
        num_ = UPoly();
        den_ = UPoly::constant(Rational::one());
        return;
    }
    UPoly g = UPoly::gcd(num, den);
    if (g.degree() > 0) {
        num = UPoly::divmod(num, g).first;
        den = UPoly::divmod(den, g).first;
    }
    Rational lead = den.leading();
    den_ = den.monic();
    // Push the denominator's leading coefficient into the numerator.
    std::vector<Rational> scaled;
    scaled.reserve(num.degree() + 1);
    for (int i = 0; i <= num.degree(); ++i) scaled.push_back(num.coefficient(i) / lead);
    num_ = UPoly(std::move(scaled));
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-(const RatFun& o) const {
    return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}
RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw PreconditionError("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}
RatFun RatFun::operator-() const { return RatFun(-num_, den_); }
RatFun RatFun::inv() const {
    if (is_zero()) throw PreconditionError("RatFun: inverse of zero");
    return RatFun(den_, num_);
}

int RatFun::valuation() const {
    if (is_zero()) throw PreconditionError("RatFun: valuation of zero");
    return num_.valuation() - den_.valuation();
}

RatFun RatFun::shifted(int k) const {
    if (is_zero()) return *this;
    if (k == 0) return *this;
    if (k > 0) {
        int nv = num_.valuation();
        if (nv >= k) return RatFun(num_.shifted_down(k), den_);
        return RatFun(num_.shifted_down(nv), den_ * UPoly::t(k - nv));
    }
    return RatFun(num_ * UPoly::t(-k), den_);
}

Rational RatFun::eval0() const {
    if (is_zero()) return Rational::zero();
    if (valuation() < 0) throw PreconditionError("RatFun: pole at t = 0");
    int dv = den_.valuation();
    if (dv == 0) return num_.coefficient(0) / den_.coefficient(0);
    // num and den share the factor t^dv.
    return num_.coefficient(dv) / den_.coefficient(dv);
}

std::string RatFun::str() const {
    if (den_ == UPoly::constant(Rational::one())) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// --- limit_column_space ---------------------------------------------------

LimitColumnSpace limit_column_space(const Matrix<RatFun>& m) {
    const int rows = m.rows(), cols = m.cols();
    if (cols == 0) return {};

    std::vector<std::vector<RatFun>> col(cols, std::vector<RatFun>(rows));
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) col[c][r] = m.at(r, c);

    auto column_valuation = [&](int c) -> std::optional<int> {
        std::optional<int> v;
        for (int r = 0; r < rows; ++r) {
            if (col[c][r].is_zero()) continue;
            int w = col[c][r].valuation();
            if (!v || w < *v) v = w;
        }
        return v;
    };

    LimitColumnSpace out;
    // Each pass clears valuations, evaluates at 0 and eliminates one rational
    // dependency. Total cleared order is bounded by the wedge's vanishing
    // order, so this terminates for independent columns.
    const int kMaxPasses = 100000;
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        for (int c = 0; c < cols; ++c) {
            auto v = column_valuation(c);
            if (!v) {
                throw PreconditionError(
                    "limit_column_space: column " + std::to_string(c) +
                    " became zero; input columns are dependent over the function field");
            }
            if (*v != 0) {
                for (int r = 0; r < rows; ++r)
                    if (!col[c][r].is_zero()) col[c][r] = col[c][r].shifted(*v);
                out.vanishing_order += *v;
            }
        }
        Matrix<Rational> eval(rows, cols, Rational::zero());
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r)
                if (!col[c][r].is_zero() && col[c][r].valuation() == 0)
                    eval.at(r, c) = col[c][r].eval0();

        auto null_basis = kernel(eval);
        if (null_basis.empty()) {
            out.basis.resize(cols, std::vector<Rational>(rows, Rational::zero()));
            for (int c = 0; c < cols; ++c)
                for (int r = 0; r < rows; ++r) out.basis[c][r] = eval.at(r, c);
            return out;
        }

        // Fold the dependency into its last participating column; the update
        // is unimodular so the column span at generic t is unchanged.
        const std::vector<Rational>& a = null_basis.front();
        int target = -1;
        for (int c = cols - 1; c >= 0; --c)
            if (!a[c].is_zero()) {
                target = c;
                break;
            }
        std::vector<RatFun> combined(rows, RatFun::zero());
        for (int c = 0; c < cols; ++c) {
            if (a[c].is_zero()) continue;
            RatFun w(a[c]);
            for (int r = 0; r < rows; ++r) combined[r] = combined[r] + w * col[c][r];
        }
        col[target] = std::move(combined);
    }
    throw LimitError("limit_column_space: pass cap exceeded");
}

}  // namespace waring
