#include "waring/detperm.hpp"

#include <algorithm>
#include <numeric>

namespace waring {

Poly<Rational> build_matrix_poly(const MatrixPolySpec& spec) {
    const int n = spec.n;
    if (n < 1) throw PreconditionError("build_matrix_poly: n >= 1");
    if (n > 7) throw LimitError("build_matrix_poly: n <= 7 (term count cap)");

    Poly<Rational> f(n * n, n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational sign(spec.kind == DetPerm::Det && inversions % 2 == 1 ? -1 : 1);
        std::vector<int> e(n * n, 0);
        for (int i = 0; i < n; ++i) e[spec.var(i, perm[i])] = 1;
        f.add_term(Monomial(std::move(e)), sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return f;
}

std::vector<WeightedProduct> ryser_decomposition(int n) {
    if (n < 2 || n > 5) throw PreconditionError("ryser_decomposition: 2 <= n <= 5");
    MatrixPolySpec spec{n, DetPerm::Perm};

    std::vector<WeightedProduct> out;
    Rational weight(1);
    for (int i = 1; i < n; ++i) weight = weight / Rational(2);

    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
        std::vector<int> eps(n, 1);
        for (int i = 1; i < n; ++i) eps[i] = (bits >> (i - 1) & 1u) ? -1 : 1;
        WeightedProduct wp;
        wp.weight = weight;
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> c(n * n, Rational::zero());
            for (int j = 0; j < n; ++j) c[spec.var(i, j)] = Rational(eps[i] * eps[j]);
            wp.factors.push_back(LinearForm<Rational>(std::move(c)));
        }
        out.push_back(std::move(wp));
    }
    return out;
}

long long gurvits_upper(int n, DetPerm kind) {
    if (n < 2) throw PreconditionError("gurvits_upper: n >= 2");
    if (n > 16) throw LimitError("gurvits_upper: table values exceed 64 bits");
    if (kind == DetPerm::Det) {
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        return (1LL << (n - 1)) * fact;
    }
    return 1LL << (2 * (n - 1));
}

Poly<Rational> expand_product(const WeightedProduct& p) {
    if (p.factors.empty()) throw PreconditionError("expand_product: empty product");
    int n = p.factors[0].nvars();
    Poly<Rational> acc =
        Poly<Rational>::monomial(n, Monomial::constant(n), p.weight);
    for (const auto& l : p.factors) acc = acc * power_of_linear(l, 1);
    return acc;
}

}  // namespace waring
