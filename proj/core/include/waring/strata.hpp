#pragma once

#include <string>
#include <vector>

#include "waring/poly.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Dimensions of the singular strata Sigma_s (points where every partial of
// order <= s vanishes), for the structured families with known formulas plus
// a coordinate-subspace fallback. dim = -1 encodes the empty stratum.
// ---------------------------------------------------------------------------

enum class StratumMethod {
    MonomialCombinatorial,
    DetFormula,
    PermFormula,
    ReducibleFactor,
    BruteForceGrid,
};

struct StratumDim {
    int s = 0;
    int dim = -1;
    StratumMethod method = StratumMethod::MonomialCombinatorial;
    bool lower_bound_only = false;
};

/// Stratum dimension of a monomial with all exponents >= 1:
/// n - 1 - min{|S| : sum of the |S| largest exponents >= s + 1}, or -1.
StratumDim sigma_dim_monomial(const std::vector<int>& exponents, int s);

/// Determinant: the rank <= n-a-1 locus, of dimension n^2 - 1 - (a+1)^2.
StratumDim sigma_dim_det(int n, int a);

/// Permanent: matrices with a+1 zero columns give a lower bound
/// n(n-a-1) - 1 on the stratum dimension.
StratumDim sigma_dim_perm_lb(int n, int a);

/// Dimension of the largest coordinate subspace on which all partials of
/// order <= s vanish identically. Certified lower bound for dim Sigma_s;
/// exact for monomials. Limits: n <= 6, d <= 6.
StratumDim sigma_dim_bruteforce(const Poly<Rational>& f, int s);

struct LowerBoundContribution {
    long long value = 0;
    std::string provenance;
};

/// The singularity lower bound rank(catalecticant at s) + dim Sigma_s + 1,
/// one contribution per supplied stratum. Requires the polynomial to span
/// all of its variables (reduce first otherwise); callers pass the
/// catalecticant ranks they already computed.
std::vector<LowerBoundContribution> sigma_lower_bound(
    const std::vector<int>& catalecticant_ranks_by_s,  // index 0 holds s = 1
    const std::vector<StratumDim>& strata);

enum class Factorization { Reducible, RepeatedFactor };

/// Rank >= 2n-2 for reducible forms, >= 2n-1 with a repeated factor.
/// The factorization property is asserted by the caller.
LowerBoundContribution reducibility_bound(int nvars, Factorization kind);

}  // namespace waring
