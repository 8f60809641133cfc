#include "waring/decomp.hpp"

#include <functional>
#include <map>

#include "waring/families.hpp"

namespace waring {

VerifyResult verify(const Poly<BigComplex>& target, const Decomposition<BigComplex>& dec,
                    const BigFloat& tolerance) {
    if (dec.degree != target.degree())
        throw PreconditionError("verify: decomposition degree mismatch");
    Poly<BigComplex> diff = dec.expand(target.nvars()) - target;

    long prec = tolerance.precision();
    BigFloat max(prec);
    const Monomial* worst = nullptr;
    for (const auto& [m, c] : diff.terms()) {
        BigFloat a = c.abs();
        if (max < a) {
            max = a;
            worst = &m;
        }
    }
    VerifyResult out;
    out.max_residual = max.str(6);
    if (max <= tolerance) {
        out.status = diff.is_zero() ? VerifyStatus::ExactMatch : VerifyStatus::ApproxMatch;
    } else {
        out.status = VerifyStatus::Mismatch;
        out.witness_monomial = worst ? poly_to_string(Poly<BigComplex>::monomial(
                                           target.nvars(), *worst, BigComplex::one()))
                                     : "";
    }
    return out;
}

Decomposition<Rational> product_decomposition(int n) {
    if (n < 1 || n > 8) throw PreconditionError("product_decomposition: 1 <= n <= 8");
    Decomposition<Rational> dec;
    dec.degree = n;
    if (n == 1) {
        dec.terms.emplace_back(Rational::one(),
                               LinearForm<Rational>({Rational::one()}));
        return dec;
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    mpz_class scale = (mpz_class(1) << (n - 1)) * fact;
    Rational base = Rational(scale).inv();
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
        int sign = 1;
        std::vector<Rational> c(n, Rational::zero());
        c[0] = Rational::one();
        for (int i = 1; i < n; ++i) {
            int eps = (bits >> (i - 1) & 1u) ? -1 : 1;
            sign *= eps;
            c[i] = Rational(eps);
        }
        dec.terms.emplace_back(base * Rational(sign), LinearForm<Rational>(std::move(c)));
    }
    return dec;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

using BC = BigComplex;
using LFQ = LinearForm<Rational>;
using LFG = LinearForm<GaussianRational>;
using LFC = LinearForm<BC>;

LFQ lfq(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.push_back(Rational(x));
    return LFQ(std::move(c));
}

// The four-cube identity for a product of three variables, mapped onto the
// given variable indices inside nvars.
void add_xyz_identity(Decomposition<Rational>& dec, int nvars, int vx, int vy, int vz) {
    auto form = [&](int sx, int sy, int sz) {
        std::vector<Rational> c(nvars, Rational::zero());
        c[vx] = Rational(sx);
        c[vy] = Rational(sy);
        c[vz] = Rational(sz);
        return LFQ(std::move(c));
    };
    Rational w(1, 24);
    dec.terms.emplace_back(w, form(1, 1, 1));
    dec.terms.emplace_back(-w, form(-1, 1, 1));
    dec.terms.emplace_back(-w, form(1, -1, 1));
    dec.terms.emplace_back(-w, form(1, 1, -1));
}

struct EntryDef {
    CatalogEntry info;
    std::function<CatalogVerification(long, double)> run;
    std::function<Poly<Rational>()> target;  // null when the target needs numeric coefficients
    std::function<Decomposition<Rational>()> rational_dec;  // rational-field entries only
};

CatalogVerification run_rational(const CatalogEntry& info, const Poly<Rational>& target,
                                 const Decomposition<Rational>& dec) {
    CatalogVerification out;
    out.info = info;
    out.info.power_count = dec.power_count();
    auto res = verify(target, dec);
    out.status = res.status;
    out.ok = (res.status == VerifyStatus::ExactMatch);
    out.target_text = poly_to_string(target);
    return out;
}

CatalogVerification run_gaussian(const CatalogEntry& info, const Poly<Rational>& target_q,
                                 const Decomposition<GaussianRational>& dec) {
    Poly<GaussianRational> target(target_q.nvars(), target_q.degree());
    for (const auto& [m, c] : target_q.terms()) target.add_term(m, GaussianRational(c));
    CatalogVerification out;
    out.info = info;
    out.info.power_count = dec.power_count();
    auto res = verify(target, dec);
    out.status = res.status;
    out.ok = (res.status == VerifyStatus::ExactMatch);
    out.target_text = poly_to_string(target_q);
    return out;
}

CatalogVerification run_complex(const CatalogEntry& info, const Poly<Rational>& target_q,
                                const Decomposition<BC>& dec, long prec, double tol) {
    Poly<BC> target(target_q.nvars(), target_q.degree());
    for (const auto& [m, c] : target_q.terms()) target.add_term(m, embed_complex(c, prec));
    CatalogVerification out;
    out.info = info;
    out.info.power_count = dec.power_count();
    auto res = verify(target, dec, BigFloat(tol, prec));
    out.status = res.status;
    out.max_residual = res.max_residual;
    out.ok = (res.status != VerifyStatus::Mismatch);
    out.target_text = poly_to_string(target_q);
    return out;
}

// Complex constants at a given precision.
struct Consts {
    long prec;
    BC i, omega, omega2;
    BigFloat sqrt3, quartic3, cbrt2;
    explicit Consts(long p)
        : prec(p),
          i(BC::i(p)),
          omega(BC::root_of_unity(3, p)),
          omega2(BC::root_of_unity(3, p) * BC::root_of_unity(3, p)),
          sqrt3(BigFloat(Rational(3), p).sqrt()),
          quartic3(BigFloat(Rational(3), p).sqrt().sqrt()),
          cbrt2(BigFloat(Rational(2), p).cbrt()) {}
    BC real(BigFloat x) const { return BC(std::move(x), BigFloat(prec)); }
    BC rat(long n, long den = 1) const { return embed_complex(Rational(n, den), prec); }
};

LFC lfc(std::vector<BC> v) { return LFC(std::move(v)); }

// (omega a - b)^3 - (omega^2 a - b)^3 = 3 sqrt(3) i * a b (a + b), as two
// weighted cubes with weight w.
void add_omega_pair(Decomposition<BC>& dec, const Consts& k, const BC& w,
                    const std::vector<BC>& a, const std::vector<BC>& b) {
    std::vector<BC> f1, f2;
    for (size_t j = 0; j < a.size(); ++j) {
        f1.push_back(k.omega * a[j] - b[j]);
        f2.push_back(k.omega2 * a[j] - b[j]);
    }
    dec.terms.emplace_back(w, lfc(std::move(f1)));
    dec.terms.emplace_back(-w, lfc(std::move(f2)));
}

const std::vector<EntryDef>& catalog() {
    static const std::vector<EntryDef> entries = [] {
        std::vector<EntryDef> defs;

        auto push = [&](CatalogEntry info, std::function<Poly<Rational>()> target,
                        std::function<CatalogVerification(long, double)> run) {
            EntryDef def;
            def.info = std::move(info);
            def.target = std::move(target);
            def.run = std::move(run);
            defs.push_back(std::move(def));
        };

        // xy(x+y): two cubes through the primitive cube root of unity.
        push({"cubic.concurrent", "three concurrent lines x*y*(x+y)", "bigcomplex", 2, 2, 2,
              false, ""},
             cubic_concurrent_lines,
             [](long p, double tol) {
                 Consts k(p);
                 Decomposition<BC> dec;
                 dec.degree = 3;
                 BC w = BC::one(p) / (k.rat(3) * k.real(k.sqrt3) * k.i);
                 add_omega_pair(dec, k, w, {k.rat(1), k.rat(0), k.rat(0)},
                                {k.rat(0), k.rat(1), k.rat(0)});
                 return run_complex(catalog_info("cubic.concurrent"), cubic_concurrent_lines(),
                                    dec, p, tol);
             });

        auto push_rational = [&defs](CatalogEntry info, std::function<Poly<Rational>()> target,
                                     std::function<Decomposition<Rational>()> dec) {
            EntryDef def;
            def.info = std::move(info);
            def.target = std::move(target);
            def.rational_dec = std::move(dec);
            std::string id = def.info.id;
            def.run = [id](long, double) {
                auto parts = catalog_rational(id);
                return run_rational(catalog_info(id), parts->first, parts->second);
            };
            defs.push_back(std::move(def));
        };

        push_rational(
            {"cubic.double_line", "double line + line x^2*y", "rational", 3, 3, 2, false, ""},
            cubic_double_line_plus_line, [] {
                Decomposition<Rational> dec;
                dec.degree = 3;
                dec.terms.emplace_back(Rational(1, 6), lfq({1, 1, 0}));
                dec.terms.emplace_back(Rational(-1, 6), lfq({1, -1, 0}));
                dec.terms.emplace_back(Rational(-1, 3), lfq({0, 1, 0}));
                return dec;
            });

        push_rational(
            {"cubic.cusp", "cusp y^2*z - x^3", "rational", 4, 4, 3, true,
             "middle sign of the two-cube pair corrected so the identity holds"},
            cubic_cusp, [] {
                Decomposition<Rational> dec;
                dec.degree = 3;
                dec.terms.emplace_back(Rational(1, 6), lfq({0, 1, 1}));
                dec.terms.emplace_back(Rational(-1, 6), lfq({0, 1, -1}));
                dec.terms.emplace_back(Rational(-1, 3), lfq({0, 0, 1}));
                dec.terms.emplace_back(Rational(-1), lfq({1, 0, 0}));
                return dec;
            });

        push_rational({"cubic.triangle", "triangle x*y*z", "rational", 4, 4, 4, false, ""},
                      cubic_triangle, [] {
                          Decomposition<Rational> dec;
                          dec.degree = 3;
                          add_xyz_identity(dec, 3, 0, 1, 2);
                          return dec;
                      });

        push_rational(
            {"cubic.conic_transversal", "conic + transversal line x*(x^2+y*z)", "rational", 4,
             4, 4, true,
             "printed exponent was impossible at this degree; the four-cube ansatz was "
             "solved exactly"},
            cubic_conic_plus_transversal, [] {
                Decomposition<Rational> dec;
                dec.degree = 3;
                Rational w(1, 96);
                dec.terms.emplace_back(w, lfq({4, 1, 1}));
                dec.terms.emplace_back(w, lfq({4, -1, -1}));
                dec.terms.emplace_back(Rational(-2) * w, lfq({2, 1, -1}));
                dec.terms.emplace_back(Rational(-2) * w, lfq({2, -1, 1}));
                return dec;
            });

        push({"cubic.harmonic", "irreducible y^2*z - x^3 - x*z^2", "bigcomplex", 4, 4, 4,
              false, ""},
             cubic_harmonic_curve,
             [](long p, double tol) {
                 Consts k(p);
                 Decomposition<BC> dec;
                 dec.degree = 3;
                 BC w = -(BC::one(p) / (k.rat(12) * k.real(k.sqrt3)));
                 BC s3 = k.real(k.sqrt3), q3 = k.real(k.quartic3);
                 dec.terms.emplace_back(w, lfc({s3, q3 * k.i, k.rat(1)}));
                 dec.terms.emplace_back(w, lfc({s3, -(q3 * k.i), k.rat(1)}));
                 dec.terms.emplace_back(w, lfc({s3, q3, k.rat(-1)}));
                 dec.terms.emplace_back(w, lfc({s3, -q3, k.rat(-1)}));
                 return run_complex(catalog_info("cubic.harmonic"), cubic_harmonic_curve(), dec,
                                    p, tol);
             });

        push({"cubic.three_cubes", "irreducible y^2*z - x^3 - z^3", "bigcomplex", 3, 3, 3,
              false, ""},
             cubic_three_cube_curve,
             [](long p, double tol) {
                 Consts k(p);
                 Decomposition<BC> dec;
                 dec.degree = 3;
                 BC w = BC::one(p) / (k.rat(6) * k.real(k.sqrt3) * k.i);
                 // a = 2z, b = y - z gives z(y-z)(y+z) = y^2 z - z^3.
                 add_omega_pair(dec, k, w, {k.rat(0), k.rat(0), k.rat(2)},
                                {k.rat(0), k.rat(1), k.rat(-1)});
                 dec.terms.emplace_back(k.rat(-1), lfc({k.rat(1), k.rat(0), k.rat(0)}));
                 return run_complex(catalog_info("cubic.three_cubes"), cubic_three_cube_curve(),
                                    dec, p, tol);
             });

        auto weierstrass_dec = [](const Consts& k, const BC& beta) {
            // z(y-z)(y+z) - x(x - beta z)(x + beta z) with beta^2 = -a.
            Decomposition<BC> dec;
            dec.degree = 3;
            BC w = BC::one(k.prec) / (k.rat(6) * k.real(k.sqrt3) * k.i);
            add_omega_pair(dec, k, w, {k.rat(0), k.rat(0), k.rat(2)},
                           {k.rat(0), k.rat(1), k.rat(-1)});
            add_omega_pair(dec, k, -w, {k.rat(1), k.rat(0), -beta},
                           {k.rat(1), k.rat(0), beta});
            return dec;
        };

        push({"cubic.smooth_a1", "irreducible, smooth y^2*z - x^3 - x*z^2 - z^3 (a = 1)",
              "bigcomplex", 4, 4, 4, false, ""},
             [] { return cubic_general_weierstrass(Rational(1)); },
             [weierstrass_dec](long p, double tol) {
                 Consts k(p);
                 auto dec = weierstrass_dec(k, k.i);  // beta = a^{1/2} i with a = 1
                 return run_complex(catalog_info("cubic.smooth_a1"),
                                    cubic_general_weierstrass(Rational(1)), dec, p, tol);
             });

        push({"cubic.singular_a", "irreducible, singular (a^3 = -27/4)", "bigcomplex", 4, 4, 4,
              false,
              "a is the real cube root of -27/4; only this row needs a numeric "
              "instantiation of a"},
             nullptr,
             [weierstrass_dec](long p, double tol) {
                 Consts k(p);
                 // a = -3 / cbrt(4); beta = a^{1/2} i = -sqrt(3/cbrt 4) (real).
                 BigFloat amag = BigFloat(Rational(3), p) / (k.cbrt2 * k.cbrt2);
                 BC a = k.real(-amag);
                 BC beta = -k.real(amag.sqrt());
                 auto dec = weierstrass_dec(k, beta);
                 // Target with the numeric a: y^2 z - x^3 - a x z^2 - z^3.
                 Poly<BC> target(3, 3);
                 target.add_term(Monomial({0, 2, 1}), BC::one(p));
                 target.add_term(Monomial({3, 0, 0}), -BC::one(p));
                 target.add_term(Monomial({1, 0, 2}), -a);
                 target.add_term(Monomial({0, 0, 3}), -BC::one(p));
                 CatalogVerification out;
                 out.info = catalog_info("cubic.singular_a");
                 out.info.power_count = dec.power_count();
                 auto res = verify(target, dec, BigFloat(tol, p));
                 out.status = res.status;
                 out.max_residual = res.max_residual;
                 out.ok = (res.status != VerifyStatus::Mismatch);
                 out.target_text = "y^2*z - x^3 - a*x*z^2 - z^3, a = -3/cbrt(4)";
                 return out;
             });

        push({"cubic.conic_tangent", "conic + tangent line y*(x^2+y*z)", "bigcomplex", 5, 5, 3,
              false, ""},
             cubic_conic_plus_tangent,
             [](long p, double tol) {
                 Consts k(p);
                 Decomposition<BC> dec;
                 dec.degree = 3;
                 BC w = BC::one(p) / (k.rat(6) * k.real(k.sqrt3) * k.i);
                 // a = 2y, b = x - y gives y(x-y)(x+y).
                 add_omega_pair(dec, k, w, {k.rat(0), k.rat(2), k.rat(0)},
                                {k.rat(1), k.rat(-1), k.rat(0)});
                 // y^2(y+z) as three rational cubes.
                 dec.terms.emplace_back(k.rat(1, 6), lfc({k.rat(0), k.rat(2), k.rat(1)}));
                 dec.terms.emplace_back(k.rat(1, 6), lfc({k.rat(0), k.rat(0), k.rat(1)}));
                 dec.terms.emplace_back(k.rat(-1, 3), lfc({k.rat(0), k.rat(1), k.rat(1)}));
                 return run_complex(catalog_info("cubic.conic_tangent"),
                                    cubic_conic_plus_tangent(), dec, p, tol);
             });

        // x(y_1^2 + ... + y_m^2) with the pair weights chosen so every cube is
        // Gaussian-rational: the split constants a_j are 3 k^2 with signs
        // balancing to zero.
        auto lq_entry = [&push](const std::string& id, int m, std::vector<long> roots) {
            // roots r_j: positive r means a_j = -3 (r/3)^2-style real pair
            // (y + r x), negative r means the imaginary pair (y + |r| i x).
            push({id, "x*(y_1^2+...+y_m^2) as 2m Gaussian cubes", "gaussian", 2 * m, 2 * m,
                  std::nullopt, true, "split constants solved for Gaussian-rational roots"},
                 [m] { return line_times_quadric_poly(m); },
                 [id, m, roots](long, double) {
                     Decomposition<GaussianRational> dec;
                     dec.degree = 3;
                     for (int j = 0; j < m; ++j) {
                         long r = roots[j];
                         bool imaginary = r < 0;
                         long mag = imaginary ? -r : r;
                         // (y + b x)^3 - (y - b x)^3 = 6 b x y^2 + 2 b^3 x^3.
                         GaussianRational b = imaginary
                                                  ? GaussianRational(Rational(0), Rational(mag))
                                                  : GaussianRational(Rational(mag));
                         GaussianRational scale = (GaussianRational(Rational(6)) * b).inv();
                         std::vector<GaussianRational> plus(m + 1, GaussianRational::zero());
                         std::vector<GaussianRational> minus(m + 1, GaussianRational::zero());
                         plus[0] = b;
                         minus[0] = -b;
                         plus[j + 1] = GaussianRational::one();
                         minus[j + 1] = GaussianRational::one();
                         dec.terms.emplace_back(scale, LFG(std::move(plus)));
                         dec.terms.emplace_back(-scale, LFG(std::move(minus)));
                     }
                     return run_gaussian(catalog_info(id), line_times_quadric_poly(m), dec);
                 });
        };
        lq_entry("lq.m2", 2, {-3, 3});
        lq_entry("lq.m3", 3, {-9, -12, 15});

        // Sums of disjoint triple products: 4m rational cubes.
        for (int m = 1; m <= 3; ++m) {
            std::string id = "xyzblocks.m" + std::to_string(m);
            push_rational({id, "x_1y_1z_1 + ... + x_my_mz_m as 4m cubes", "rational", 4 * m,
                           4 * m, std::nullopt, false, ""},
                          [m] { return triple_blocks_poly(m); }, [m] {
                              Decomposition<Rational> dec;
                              dec.degree = 3;
                              for (int b = 0; b < m; ++b)
                                  add_xyz_identity(dec, 3 * m, 3 * b, 3 * b + 1, 3 * b + 2);
                              return dec;
                          });
        }

        // x^2 u + y^2 v + xyz as nine cubes. The printed identity produces
        // 6 cbrt(2) xyz, so z is rescaled by 1/(6 cbrt 2) throughout.
        push({"sixvars.rank9", "x^2*u + y^2*v + x*y*z as nine cubes", "bigcomplex", 9, 9, 5,
              true, "z rescaled to normalize the cross term; rank lies in [8, 9]"},
             two_squares_plus_cross_poly,
             [](long p, double tol) {
                 Consts k(p);
                 Decomposition<BC> dec;
                 dec.degree = 3;
                 BC c = k.real(k.cbrt2);         // 2^{1/3}
                 BC c2 = c * c;                  // 2^{2/3}
                 BC zs = (k.rat(6) * c).inv();   // z scale 1/(6 cbrt 2)
                 BC half = k.rat(1, 2);
                 BC zero = k.rat(0), one = k.rat(1);
                 // Variables: (x, y, z, u, v).
                 dec.terms.emplace_back(one, lfc({one, one, k.rat(1, 6), zero, zero}));
                 dec.terms.emplace_back(-one, lfc({c2, zero, zs, zero, zero}));
                 dec.terms.emplace_back(-one, lfc({zero, c2, zs, zero, zero}));
                 // -x^2 w1 with w1 = -u - 3x + 3y - z/2 (after rescaling).
                 std::vector<BC> xf = {one, zero, zero, zero, zero};
                 std::vector<BC> w1 = {k.rat(3), k.rat(-3), half, one, zero};
                 // -y^2 w2 with w2 = -v + 3x - 3y - z/2.
                 std::vector<BC> yf = {zero, one, zero, zero, zero};
                 std::vector<BC> w2 = {k.rat(-3), k.rat(3), half, zero, one};
                 for (auto& [coef, form] :
                      square_times_linear_cubes(LFC(xf), LFC(w1)))
                     dec.terms.emplace_back(coef, form);
                 for (auto& [coef, form] :
                      square_times_linear_cubes(LFC(yf), LFC(w2)))
                     dec.terms.emplace_back(coef, form);
                 return run_complex(catalog_info("sixvars.rank9"),
                                    two_squares_plus_cross_poly(), dec, p, tol);
             });

        return defs;
    }();
    return entries;
}

}  // namespace

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.info.id);
    return ids;
}

CatalogEntry catalog_info(const std::string& id) {
    for (const auto& e : catalog())
        if (e.info.id == id) return e.info;
    throw PreconditionError("unknown catalog entry: " + id);
}

CatalogVerification run_catalog_entry(const std::string& id, long precision_bits,
                                      double tolerance) {
    for (const auto& e : catalog())
        if (e.info.id == id) return e.run(precision_bits, tolerance);
    throw PreconditionError("unknown catalog entry: " + id);
}

std::optional<std::pair<Poly<Rational>, Decomposition<Rational>>> catalog_rational(
    const std::string& id) {
    for (const auto& e : catalog()) {
        if (e.info.id != id) continue;
        if (!e.rational_dec) return std::nullopt;
        return std::make_pair(e.target(), e.rational_dec());
    }
    throw PreconditionError("unknown catalog entry: " + id);
}

Poly<Rational> catalog_target(const std::string& id) {
    for (const auto& e : catalog()) {
        if (e.info.id != id) continue;
        if (!e.target)
            throw PreconditionError("catalog entry '" + id + "' has no rational target");
        return e.target();
    }
    throw PreconditionError("unknown catalog entry: " + id);
}

}  // namespace waring
