#pragma once

#include <optional>
#include <string>
#include <vector>

#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Monomial combinatorics.
// ---------------------------------------------------------------------------

/// Binomial with C(a, b) = 0 whenever b > a or a < 0.
long long binomial(long long a, long long b);

/// Number of tuples (a_1..a_m), 0 <= a_j <= b_j, summing to delta, by
/// inclusion-exclusion over the upper-bound violations.
long long count_S(const std::vector<int>& b, int delta);

/// Product of (1 + b_i): tuples with bounded entries and free sum.
long long count_T(const std::vector<int>& b);

// ---------------------------------------------------------------------------
// RankReport: accumulated bounds with provenance, merged to the tightest
// bracket. Lower bounds on border rank bound rank too; upper bounds on rank
// bound border rank too.
// ---------------------------------------------------------------------------

struct Bound {
    long long value = 0;
    std::string provenance;
};

struct RankReport {
    std::string poly_id;
    std::vector<Bound> rank_lower_sources, rank_upper_sources;
    std::vector<Bound> border_lower_sources, border_upper_sources;

    Bound rank_lower, rank_upper, border_lower, border_upper;
    std::optional<long long> exact_rank, exact_border;

    void add_rank_lower(long long v, std::string why) {
        rank_lower_sources.push_back({v, std::move(why)});
    }
    void add_rank_upper(long long v, std::string why) {
        rank_upper_sources.push_back({v, std::move(why)});
    }
    void add_border_lower(long long v, std::string why) {
        border_lower_sources.push_back({v, std::move(why)});
    }
    void add_border_upper(long long v, std::string why) {
        border_upper_sources.push_back({v, std::move(why)});
    }
    void pin_rank(long long v, const std::string& why) {
        add_rank_lower(v, why);
        add_rank_upper(v, why);
    }
    void pin_border(long long v, const std::string& why) {
        add_border_lower(v, why);
        add_border_upper(v, why);
    }

    /// Computes the merged bracket and the exact fields; throws if the
    /// accumulated sources are inconsistent.
    void merge();
};

// ---------------------------------------------------------------------------
// Bound sources.
// ---------------------------------------------------------------------------

/// Border-rank bracket for a monomial with sorted exponents b0 >= ... >= bn
/// >= 1 (n >= 1): S at floor(d/2) below, T of the tail above; exact when
/// b0 >= b1 + ... + bn. Input is sorted internally (ranks are permutation
/// invariant).
void monomial_border_bounds(std::vector<int> exponents, RankReport& report);

/// Upper bound (b0+1)...(b_{n-1}+1) * bn for the rank of a monomial.
long long monomial_rank_upper(std::vector<int> exponents);

/// The product x_1...x_n: rank in [C(n,floor(n/2)) + ceil(n/2) - 1, 2^{n-1}],
/// border rank in [C(n,floor(n/2)), 2^{n-1}]; n = 4 is pinned to rank 8.
void product_bounds(int n, RankReport& report);

enum class DetPerm { Det, Perm };

struct DetPermRow {
    int n = 0;
    long long rank_upper = 0;
    long long rank_lower = 0;
    long long border_lower = 0;
};

/// Table row for det_n or per_n; formulas only.
DetPermRow detperm_bounds(int n, DetPerm which);

/// Aggregate every applicable bound source for an exact-coefficient input:
/// span reduction first, then flattenings, the universal upper bound,
/// binary completeness, monomial theorems, singularity bounds, the ternary
/// cubic classification and the pinned family values.
RankReport aggregate(const Poly<Rational>& f);

}  // namespace waring
