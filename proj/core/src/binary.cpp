#include "waring/binary.hpp"

namespace waring {

namespace {

// Dual forms of degree s annihilating f under contraction. Unlike the
// catalecticant helper this admits s = d, where the pairing lands in
// constants; that order is needed for even-degree forms with full middle
// rank (already at d = 2).
template <ExactScalar F>
std::vector<Poly<F>> apolar_kernel(const Poly<F>& f, int s) {
    const int d = f.degree();
    auto rows = monomials_of_degree(2, d - s);
    auto cols = monomials_of_degree(2, s);
    Matrix<F> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()),
                FieldTraits<F>::zero());
    for (size_t j = 0; j < cols.size(); ++j) {
        Poly<F> derived = contract(Poly<F>::monomial(2, cols[j], FieldTraits<F>::one()), f);
        for (const auto& [mon, c] : derived.terms()) {
            auto it = std::lower_bound(rows.begin(), rows.end(), mon, GrlexDescending{});
            m.at(static_cast<int>(it - rows.begin()), static_cast<int>(j)) = c;
        }
    }
    auto basis = kernel(m);
    std::vector<Poly<F>> out;
    for (const auto& v : basis) {
        Poly<F> q(2, s);
        for (size_t j = 0; j < cols.size(); ++j)
            if (!v[j].is_zero()) q.add_term(cols[j], v[j]);
        out.push_back(std::move(q));
    }
    return out;
}

template <ExactScalar F>
BinaryRankCertificateT<F> sylvester_impl(const Poly<F>& f) {
    if (f.nvars() != 2)
        throw PreconditionError(
            "sylvester_rank: binary form required; reduce to the essential "
            "variables (span_dim) first");
    if (f.is_zero()) throw PreconditionError("sylvester_rank: zero polynomial");

    const int d = f.degree();
    BinaryRankCertificateT<F> cert;
    cert.degree = d;
    if (d == 1) {
        cert.border_rank = 1;
        cert.rank = 1;
        return cert;
    }

    int r = 0;
    std::vector<Poly<F>> ker;
    for (int s = 1; s <= d; ++s) {
        ker = apolar_kernel(f, s);
        if (!ker.empty()) {
            r = s;
            break;
        }
    }
    if (r == 0) throw LimitError("sylvester_rank: no apolar kernel found");
    cert.border_rank = r;

    std::optional<Poly<F>> witness;
    if (ker.size() == 1) {
        if (square_free(ker[0])) witness = ker[0];
    } else {
        const int side = 2 * r;
        std::vector<int> c(ker.size(), 0);
        auto advance = [&]() {
            for (size_t i = 0; i < c.size(); ++i) {
                if (++c[i] < side) return true;
                c[i] = 0;
            }
            return false;
        };
        do {
            Poly<F> p(2, r);
            for (size_t i = 0; i < ker.size(); ++i)
                if (c[i] != 0)
                    p = p + ker[i].scaled(FieldTraits<F>::from_rational(Rational(c[i])));
            if (!p.is_zero() && square_free(p)) {
                witness = std::move(p);
                break;
            }
        } while (advance());
    }

    if (witness) {
        cert.rank = r;
        cert.dichotomy_case = BinaryCase::SquareFreeKernel;
        cert.kernel_witness = std::move(witness);
    } else {
        cert.rank = d - r + 2;
        cert.dichotomy_case = BinaryCase::MultipleRootForced;
    }
    return cert;
}

}  // namespace

BinaryRankCertificate sylvester_rank(const Poly<Rational>& f) {
    return sylvester_impl(f);
}

BinaryRankCertificateT<GaussianRational> sylvester_rank(const Poly<GaussianRational>& f) {
    return sylvester_impl(f);
}

int rank_of_binary_restriction(const Poly<Rational>& f,
                               const LinearForm<Rational>& dir1,
                               const LinearForm<Rational>& dir2) {
    const int n = f.nvars();
    if (dir1.nvars() != n || dir2.nvars() != n)
        throw PreconditionError("rank_of_binary_restriction: direction arity mismatch");
    Matrix<Rational> span(2, n, Rational::zero());
    for (int i = 0; i < n; ++i) {
        span.at(0, i) = dir1.coefficients[i];
        span.at(1, i) = dir2.coefficients[i];
    }
    if (rank(span) != 2)
        throw PreconditionError("rank_of_binary_restriction: directions do not span a plane");

    std::vector<LinearForm<Rational>> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i)
        images.push_back(LinearForm<Rational>({dir1.coefficients[i], dir2.coefficients[i]}));
    Poly<Rational> g = substitute(f, images);
    if (g.is_zero()) return 0;
    return sylvester_rank(g).rank;
}

}  // namespace waring
