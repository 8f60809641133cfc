#include "waring/bounds.hpp"

#include <algorithm>

#include "waring/binary.hpp"
#include "waring/cubic.hpp"
#include "waring/families.hpp"
#include "waring/flatten.hpp"
#include "waring/strata.hpp"

namespace waring {

long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    if (!c.fits_slong_p()) throw LimitError("binomial: value exceeds long long");
    return c.get_si();
}

long long count_S(const std::vector<int>& b, int delta) {
    const int m = static_cast<int>(b.size());
    if (delta < 0) throw PreconditionError("count_S: negative delta");
    for (int x : b)
        if (x < 0) throw PreconditionError("count_S: negative bound");
    if (m == 0) return delta == 0 ? 1 : 0;
    if (m > 24) throw LimitError("count_S: too many variables");

    long long total = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        long long shift = 0;
        int k = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) {
                shift += b[i] + 1;
                ++k;
            }
        long long term = binomial(delta - shift + m - 1, m - 1);
        total += (k % 2 == 0) ? term : -term;
    }
    return total;
}

long long count_T(const std::vector<int>& b) {
    long long t = 1;
    for (int x : b) {
        if (x < 0) throw PreconditionError("count_T: negative bound");
        t *= (x + 1);
    }
    return t;
}

void RankReport::merge() {
    auto max_of = [](const std::vector<Bound>& v, Bound& out, bool& any) {
        for (const auto& b : v)
            if (!any || b.value > out.value) {
                out = b;
                any = true;
            }
    };
    auto min_of = [](const std::vector<Bound>& v, Bound& out, bool& any) {
        for (const auto& b : v)
            if (!any || b.value < out.value) {
                out = b;
                any = true;
            }
    };

    bool any;
    any = false;
    max_of(border_lower_sources, border_lower, any);
    if (!any) border_lower = {1, "trivial"};

    any = false;
    max_of(rank_lower_sources, rank_lower, any);
    max_of(border_lower_sources, rank_lower, any);  // R >= border rank
    if (!any) rank_lower = {1, "trivial"};

    any = false;
    min_of(rank_upper_sources, rank_upper, any);
    if (!any) throw Error("RankReport: no rank upper bound source");

    any = false;
    min_of(border_upper_sources, border_upper, any);
    min_of(rank_upper_sources, border_upper, any);  // border rank <= R

    if (rank_lower.value > rank_upper.value || border_lower.value > border_upper.value ||
        border_lower.value > rank_upper.value)
        throw Error("RankReport: inconsistent bounds for " + poly_id);

    exact_rank.reset();
    exact_border.reset();
    if (rank_lower.value == rank_upper.value) exact_rank = rank_lower.value;
    if (border_lower.value == border_upper.value) exact_border = border_lower.value;
}

void monomial_border_bounds(std::vector<int> exponents, RankReport& report) {
    std::sort(exponents.rbegin(), exponents.rend());
    while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
    if (exponents.size() < 2)
        throw PreconditionError("monomial_border_bounds: need at least two variables");
    for (int b : exponents)
        if (b < 1) throw PreconditionError("monomial_border_bounds: exponents must be >= 1");

    int d = 0;
    for (int b : exponents) d += b;
    std::vector<int> tail(exponents.begin() + 1, exponents.end());
    long long lower = count_S(exponents, d / 2);
    long long upper = count_T(tail);
    report.add_border_lower(lower, "catalecticant rank of the middle flattening (monomial count)");
    report.add_border_upper(upper, "monomial limit-plane construction, T of the tail exponents");

    int tail_sum = d - exponents[0];
    if (exponents[0] >= tail_sum) {
        // The two sides meet: the bracket is exact.
        report.add_border_lower(upper, "dominant-exponent monomial theorem (exact border rank)");
    }
}

long long monomial_rank_upper(std::vector<int> exponents) {
    std::sort(exponents.rbegin(), exponents.rend());
    while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
    if (exponents.empty() || exponents.back() < 1)
        throw PreconditionError("monomial_rank_upper: positive exponents required");
    long long v = 1;
    for (size_t i = 0; i + 1 < exponents.size(); ++i) v *= exponents[i] + 1;
    return v * exponents.back();
}

void product_bounds(int n, RankReport& report) {
    if (n < 1) throw PreconditionError("product_bounds: n >= 1");
    long long mid = binomial(n, n / 2);
    long long pow2 = 1LL << (n - 1);
    report.add_rank_lower(mid + (n + 1) / 2 - 1,
                          "singularity lower bound at the middle flattening");
    report.add_rank_upper(pow2, "polarization identity with 2^(n-1) summands");
    report.add_border_lower(mid, "middle catalecticant rank");
    report.add_border_upper(pow2, "polarization identity with 2^(n-1) summands");
    if (n == 4) report.pin_rank(8, "pinned: quadric-pencil argument for x1x2x3x4");
}

DetPermRow detperm_bounds(int n, DetPerm which) {
    if (n < 2) throw PreconditionError("detperm_bounds: n >= 2");
    if (n > 16) throw LimitError("detperm_bounds: n too large for 64-bit table values");
    DetPermRow row;
    row.n = n;
    long long mid2 = binomial(n, n / 2) * binomial(n, n / 2);
    row.border_lower = mid2;
    if (which == DetPerm::Det) {
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        row.rank_upper = (1LL << (n - 1)) * fact;
        row.rank_lower = mid2 + 1LL * n * n - 1LL * (n / 2 + 1) * (n / 2 + 1);
    } else {
        row.rank_upper = 1LL << (2 * (n - 1));
        row.rank_lower = mid2 + 1LL * n * (n - n / 2 - 1);
    }
    return row;
}

// ---------------------------------------------------------------------------
// aggregate
// ---------------------------------------------------------------------------

namespace {

std::optional<int> match_triple_blocks(const Poly<Rational>& f) {
    for (int m = 1; m <= 5; ++m)
        if (f.nvars() == 3 * m && f == triple_blocks_poly(m)) return m;
    return std::nullopt;
}

std::optional<int> match_line_times_quadric(const Poly<Rational>& f, bool with_cube) {
    int m = f.nvars() - 1;
    if (m < 2) return std::nullopt;
    const Poly<Rational> model =
        with_cube ? line_times_quadric_plus_cube_poly(m) : line_times_quadric_poly(m);
    if (f == model) return m;
    return std::nullopt;
}

}  // namespace

RankReport aggregate(const Poly<Rational>& f) {
    if (f.is_zero()) throw PreconditionError("aggregate: zero polynomial");
    RankReport report;
    report.poly_id = poly_to_string(f);

    auto reduction = reduce_to_span(f);
    const Poly<Rational>& g = reduction.reduced;
    const int k = g.nvars();
    const int d = g.degree();

    // Universal upper bound in the essential variables.
    report.add_rank_upper(binomial(k + d - 1, d) - k + 1,
                          "universal upper bound binom(n+d-1,d) - n + 1");

    if (d == 1 || k == 1) {
        report.pin_rank(1, "power of a linear form");
        report.pin_border(1, "power of a linear form");
        report.merge();
        return report;
    }

    if (d == 2) {
        // Quadratic forms: rank and border rank equal the Gram matrix rank,
        // which is the number of essential variables.
        report.pin_rank(k, "quadratic form diagonalization");
        report.pin_border(k, "quadratic form diagonalization");
        report.merge();
        return report;
    }

    auto flat = flattening_lower_bound(g);
    report.add_border_lower(flat.value, "catalecticant rank at s=" + std::to_string(flat.argmax_s));

    if (k == 2) {
        auto cert = sylvester_rank(g);
        std::string how = "binary dichotomy (" +
                          std::string(cert.dichotomy_case == BinaryCase::SquareFreeKernel
                                          ? "square-free kernel"
                                          : "forced multiple root") +
                          ")";
        report.pin_rank(cert.rank, how);
        report.pin_border(cert.border_rank, how);
        report.merge();
        return report;
    }

    if (k == 3 && d == 3) {
        auto cls = classify_cubic(g);
        report.pin_rank(cls.rank, "plane cubic classification (" + cubic_row_name(cls.row) + ")");
        report.pin_border(cls.border_rank,
                          "plane cubic classification (" + cubic_row_name(cls.row) + ")");
    }

    // Catalecticant ranks for every order, reused by the singularity bounds.
    std::vector<int> ranks_by_s(d - 1, 0);
    const bool is_monomial = (g.term_count() == 1);

    if (is_monomial) {
        std::vector<int> b = g.terms().begin()->first.exponents;
        std::sort(b.rbegin(), b.rend());
        for (int s = 1; s <= d - 1; ++s) {
            long long r = count_S(b, std::min(s, d - s));
            ranks_by_s[s - 1] = static_cast<int>(r);
        }
        bool all_ones = std::all_of(b.begin(), b.end(), [](int x) { return x == 1; });
        if (all_ones) {
            product_bounds(k, report);
        } else {
            monomial_border_bounds(b, report);
            report.add_rank_upper(monomial_rank_upper(b),
                                  "specialized polarization upper bound for monomials");
        }
        std::vector<StratumDim> strata;
        for (int s = 1; s <= d - 1; ++s) {
            auto st = sigma_dim_monomial(b, s);
            if (st.dim >= 0) strata.push_back(st);
        }
        for (auto& c : sigma_lower_bound(ranks_by_s, strata))
            report.add_rank_lower(c.value, c.provenance);

        // A monomial in >= 2 variables is reducible; an exponent >= 2 means a
        // repeated factor.
        report.add_rank_lower(reducibility_bound(k, Factorization::Reducible).value,
                              "reducible form bound 2n-2");
        if (b[0] >= 2)
            report.add_rank_lower(reducibility_bound(k, Factorization::RepeatedFactor).value,
                                  "repeated factor bound 2n-1");
        if (b == std::vector<int>{2, 1, 1})
            report.pin_rank(6, "pinned: restriction argument for the doubled product");
    } else if (k <= 6 && d <= 6) {
        for (int s = 1; s <= d - 1; ++s)
            ranks_by_s[s - 1] = catalecticant_rank(g, std::min(s, d - s));
        std::vector<StratumDim> strata;
        for (int s = 1; s <= d - 1; ++s) {
            auto st = sigma_dim_bruteforce(g, s);
            if (st.dim >= 0) strata.push_back(st);
        }
        for (auto& c : sigma_lower_bound(ranks_by_s, strata))
            report.add_rank_lower(c.value, c.provenance + " (coordinate-subspace stratum)");
    }

    // Pinned families.
    if (auto m = match_triple_blocks(g)) {
        report.pin_rank(4LL * *m, "pinned: per-block rank 4 plus singularity lower bound");
        if (*m >= 2)
            report.pin_border(3LL * *m,
                              "pinned family value for two or more blocks; the single block "
                              "is the triangle, border rank 4 (see README)");
    }
    if (auto m = match_line_times_quadric(g, false))
        report.pin_rank(2LL * *m, "pinned: reducibility bound met by the paired-root identity");
    if (auto m = match_line_times_quadric(g, true))
        report.pin_rank(2LL * *m, "pinned: reducibility bound met by the paired-root identity");
    if (g.nvars() == 5 && g == two_squares_plus_cross_poly()) {
        report.add_border_upper(5, "pinned: five-curve limit certification");
        report.add_rank_upper(9, "pinned: nine-cube identity");
    }

    report.merge();
    return report;
}

}  // namespace waring
