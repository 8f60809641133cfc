#include "waring/strata.hpp"

#include <algorithm>

namespace waring {

StratumDim sigma_dim_monomial(const std::vector<int>& exponents, int s) {
    for (int b : exponents)
        if (b < 1)
            throw PreconditionError("sigma_dim_monomial: drop zero exponents first");
    const int n = static_cast<int>(exponents.size());
    std::vector<int> sorted = exponents;
    std::sort(sorted.rbegin(), sorted.rend());

    StratumDim out;
    out.s = s;
    out.method = StratumMethod::MonomialCombinatorial;
    int sum = 0, size = 0;
    for (int b : sorted) {
        if (sum >= s + 1) break;
        sum += b;
        ++size;
    }
    out.dim = (sum >= s + 1) ? n - 1 - size : -1;
    return out;
}

StratumDim sigma_dim_det(int n, int a) {
    if (a < 1 || a > n - 1) throw PreconditionError("sigma_dim_det: a out of range");
    StratumDim out;
    out.s = a;
    out.dim = n * n - 1 - (a + 1) * (a + 1);
    out.method = StratumMethod::DetFormula;
    return out;
}

StratumDim sigma_dim_perm_lb(int n, int a) {
    if (a < 1 || a > n - 1) throw PreconditionError("sigma_dim_perm_lb: a out of range");
    StratumDim out;
    out.s = a;
    out.dim = n * (n - a - 1) - 1;
    out.method = StratumMethod::PermFormula;
    out.lower_bound_only = true;
    return out;
}

StratumDim sigma_dim_bruteforce(const Poly<Rational>& f, int s) {
    const int n = f.nvars(), d = f.degree();
    if (n > 6 || d > 7)
        throw LimitError("sigma_dim_bruteforce: limited to n <= 6, d <= 7");
    if (s < 0 || s > d) throw PreconditionError("sigma_dim_bruteforce: s out of range");

    // All partials of order <= s, generated iteratively.
    std::vector<Poly<Rational>> partials{f};
    {
        std::vector<Poly<Rational>> frontier{f};
        for (int order = 1; order <= s; ++order) {
            std::vector<Poly<Rational>> next;
            for (const auto& p : frontier)
                for (int v = 0; v < n; ++v) {
                    Poly<Rational> dp = p.diff(v);
                    if (!dp.is_zero()) next.push_back(std::move(dp));
                }
            partials.insert(partials.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
    }

    // A partial vanishes identically on {x_i = 0 : i in S} iff every one of
    // its monomials touches S.
    auto vanishes_on = [&](unsigned mask) {
        for (const auto& p : partials) {
            for (const auto& [m, c] : p.terms()) {
                bool touched = false;
                for (int v = 0; v < n && !touched; ++v)
                    if ((mask >> v & 1u) && m.exponents[v] > 0) touched = true;
                if (!touched) return false;
            }
        }
        return true;
    };

    StratumDim out;
    out.s = s;
    out.method = StratumMethod::BruteForceGrid;
    out.lower_bound_only = true;
    out.dim = -1;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        int dim = n - size - 1;  // projective dimension of the subspace
        if (dim <= out.dim) continue;
        if (vanishes_on(mask)) out.dim = dim;
    }
    return out;
}

std::vector<LowerBoundContribution> sigma_lower_bound(
    const std::vector<int>& catalecticant_ranks_by_s,
    const std::vector<StratumDim>& strata) {
    std::vector<LowerBoundContribution> out;
    for (const auto& st : strata) {
        if (st.s < 1 || st.s > static_cast<int>(catalecticant_ranks_by_s.size())) continue;
        long long rank_s = catalecticant_ranks_by_s[st.s - 1];
        LowerBoundContribution c;
        c.value = rank_s + st.dim + 1;
        c.provenance = "singularity lower bound (catalecticant rank + dim Sigma_" +
                       std::to_string(st.s) + " + 1)" +
                       (st.lower_bound_only ? " with stratum dim as lower bound" : "");
        out.push_back(std::move(c));
    }
    return out;
}

LowerBoundContribution reducibility_bound(int nvars, Factorization kind) {
    LowerBoundContribution c;
    if (kind == Factorization::Reducible) {
        c.value = 2LL * nvars - 2;
        c.provenance = "reducible form bound 2n-2";
    } else {
        c.value = 2LL * nvars - 1;
        c.provenance = "repeated factor bound 2n-1";
    }
    return c;
}

}  // namespace waring
