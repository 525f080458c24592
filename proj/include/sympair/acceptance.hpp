#pragma once

// Integration gate: one check per shipped guarantee, each with its tolerance
// pinned in code. Used by the standalone acceptance binary and by the CLI
// verify-all subcommand.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "sympair/eigenfun.hpp"
#include "sympair/niceness.hpp"
#include "sympair/probe.hpp"
#include "sympair/radial.hpp"
#include "sympair/singular.hpp"
#include "sympair/weyl.hpp"

namespace sympair::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

struct Check {
    std::ostringstream detail;
    bool ok = true;

    void require(bool cond, const std::string& msg) {
        if (!cond) {
            ok = false;
            detail << "FAILED: " << msg << "; ";
        }
    }
};

inline const SymmetricPair& pair() {
    static SymmetricPair p = make_block_pair(2, 2);
    return p;
}

inline const NilpotentCatalog& catalog() {
    static NilpotentCatalog c = build_catalog_gl4(pair());
    return c;
}

struct CatalogData {
    std::vector<std::pair<std::string, DistinguishedReport>> reports;
};

inline const CatalogData& catalog_reports() {
    static CatalogData d = [] {
        CatalogData out;
        for (const auto& e : catalog().entries) {
            if (e.x0.is_zero()) continue;
            CentralizerData cd = build_centralizer_data(pair(), e.a0);
            out.reports.emplace_back(e.label, distinguished_report(e.x0, cd));
        }
        return out;
    }();
    return d;
}

inline void for_all_alphas(int r, int max_total,
                           const std::function<void(const MultiIndex&)>& f) {
    MultiIndex a(r, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos == a.size()) {
            f(a);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            a[pos] = v;
            rec(pos + 1, rem - v);
        }
        a[pos] = 0;
    };
    rec(0, max_total);
}

// exact complex-rational pair for the lambda = i recurrence
struct GaussQ {
    Rational re, im;
    GaussQ operator*(const GaussQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussQ operator*(const Rational& s) const { return {re * s, im * s}; }
    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
};

}  // namespace detail

inline CriterionResult c1_distinguished_equivalence() {
    detail::Check c;
    const auto& reports = detail::catalog_reports().reports;
    c.require(detail::catalog().entries.size() >= 6, "catalog has fewer than 6 entries");
    int n = 0;
    for (const auto& [label, rep] : reports) {
        bool agree = rep.omega_zero_on_cx0 == rep.omega_zero_on_cy0 &&
                     rep.omega_zero_on_cx0 == rep.weights_positive &&
                     rep.omega_zero_on_cx0 == rep.zero_intersection;
        c.require(agree, "criteria disagree on " + label);
        if (!rep.verdict)
            c.require(!rep.no_semisimple_witness,
                      "no semisimple witness found for non-distinguished " + label);
        ++n;
    }
    c.detail << n << " nonzero entries, criteria (2)-(5) pairwise equal on each";
    return {1, "distinguished-equivalence", c.ok, c.detail.str()};
}

inline CriterionResult c2_niceness() {
    detail::Check c;
    NiceVerdict v = nice_verdict(detail::pair(), detail::catalog());
    c.require(v.verdict == NiceVerdictKind::Nice, "verdict is not nice");
    bool found = false;
    for (const auto& r : v.rows) {
        if (r.applicable && r.distinguished) c.require(r.delta_q > 0, "delta_q <= 0 at " + r.label);
        if (r.label == "e_tensor_I") {
            found = true;
            c.require(r.delta_q == 8, "delta_q(e tensor I) != 8");
            c.require(r.weights == std::vector<int>{2, 2, 2, 2}, "weights != (2,2,2,2)");
        }
    }
    c.require(found, "e_tensor_I entry missing");
    c.detail << "verdict nice; delta_q(e_tensor_I) = 8 with weights (2,2,2,2)";
    return {2, "niceness-gl4", c.ok, c.detail.str()};
}

inline CriterionResult c3_lambda_ladder() {
    detail::Check c;
    int data_count = 0, alpha_count = 0;
    for (const auto& [label, rep] : detail::catalog_reports().reports) {
        if (!rep.verdict) continue;
        ++data_count;
        WeightData wd = rep.wd.data();
        int r = int(wd.weights.size());
        detail::for_all_alphas(r, 6, [&](const MultiIndex& a) {
            ++alpha_count;
            // route 1
            long v1 = -2L * (a[0] + 2) + wd.dim_zs_minus;
            for (std::size_t i = 1; i < a.size(); ++i)
                v1 -= long(wd.weights[i] + 2) * (a[i] + 1);
            // route 2 through delta_q
            long delta = 0;
            for (int ni : wd.weights) delta += ni + 2;
            delta -= wd.dim_zs_minus;
            long v2 = -delta - 2L * a[0];
            for (std::size_t i = 1; i < a.size(); ++i) v2 -= long(wd.weights[i] + 2) * a[i];
            c.require(v1 == v2, "formulas disagree on " + label + " at " + mi_str(a));
            c.require(v1 < 0, "lambda not negative on " + label + " at " + mi_str(a));
            c.require(lambda_alpha(wd, a) == v1, "library value differs at " + mi_str(a));
        });
    }
    c.detail << data_count << " distinguished data, " << alpha_count
             << " multi-indices, both formulas equal and negative";
    return {3, "lambda-ladder", c.ok, c.detail.str()};
}

inline CriterionResult c4_degree_bookkeeping() {
    detail::Check c;
    std::mt19937_64 rng(12345);
    int runs = 0;
    for (int inst = 0; inst < 50; ++inst) {
        int r = 1 + int(rng() % 4);
        int l = int(rng() % 5);
        int n = 1 + int(rng() % 3);
        bool dist = (inst % 2) == 0;
        WeightData wd;
        wd.weights.assign(r, 0);
        wd.weights[0] = 2;
        if (dist) {
            for (int i = 1; i < r; ++i) wd.weights[i] = 1 + int(rng() % 4);
            int s = 0;
            for (int ni : wd.weights) s += ni + 2;
            wd.dim_zs_minus = s - (1 + int(rng() % 3));  // delta_q in {1,2,3}
        } else {
            for (int i = 1; i < r; ++i) wd.weights[i] = int(rng() % 4);
            wd.dim_zs_minus = 2 * r;
        }
        ProofAudit a = proof_degree_check(dist, wd, l, n, rng());
        int expected = dist ? 1 + l + n : l + 1 + 2 * n;
        c.require(a.pass && a.measured_degree == expected,
                  "instance " + std::to_string(inst) + " degree mismatch");
        ++runs;
    }
    c.detail << runs << " seeded instances, measured degrees equal 1+l+N / l+1+2N";
    return {4, "degree-bookkeeping", c.ok, c.detail.str()};
}

inline CriterionResult c5_delta_monomials() {
    detail::Check c;
    VarPool pool;
    SymbolTable symbols;
    ApplyContext ctx(&pool, &symbols);
    int s = symbols.fresh("S");
    long cases = 0;
    for (int r : {2, 3})
        detail::for_all_alphas(r, 5, [&](const MultiIndex& a) {
            auto res = monomial_action(a, a);
            Rational expect = mi_factorial(a);
            if (mi_total(a) % 2) expect = -expect;
            c.require(res && res->first == expect && mi_total(res->second) == 0,
                      "x^a delta^(a) wrong at " + mi_str(a));
            detail::for_all_alphas(r, 6, [&](const MultiIndex& b) {
                ++cases;
                bool exceeds = false;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (b[i] > a[i]) exceeds = true;
                if (exceeds)
                    c.require(!monomial_action(b, a).has_value(),
                              "x^b delta^(a) nonzero at " + mi_str(b) + mi_str(a));
            });
            // lowering rule
            DeltaExpansion e = delta_term(r, a, s);
            int k = degree_of_singularity(e);
            for (int i = 0; i < r; ++i) {
                OpTerm xi;
                xi.xpow = mi_unit(r, i);
                xi.dx = MultiIndex(r, 0);
                DeltaExpansion lo = apply_term(xi, e, ctx);
                if (a[i] == 0)
                    c.require(lo.terms.empty(), "x_i should kill " + mi_str(a));
                else
                    c.require(degree_of_singularity(lo) == k - 1,
                              "x_i lowering wrong at " + mi_str(a));
                OpTerm di;
                di.xpow = MultiIndex(r, 0);
                di.dx = mi_unit(r, i);
                c.require(degree_of_singularity(apply_term(di, e, ctx)) <= k + 1,
                          "d_i raising wrong at " + mi_str(a));
            }
        });
    c.detail << cases << " exhaustive monomial cases plus lowering/raising rules";
    return {5, "delta-monomial-algebra", c.ok, c.detail.str()};
}

inline CriterionResult c6_scaling() {
    detail::Check c;
    SymbolTable symbols;
    int s = symbols.fresh("S");
    int cases = 0;
    for (int r : {2, 3})
        detail::for_all_alphas(r, 5, [&](const MultiIndex& a) {
            DeltaExpansion e = delta_term(r, a, s);
            ++cases;
            c.require(scaling_exponent(e) == mi_total(a), "exponent wrong at " + mi_str(a));
            c.require(degree_of_singularity(e) == mi_total(a) + 1,
                      "degree wrong at " + mi_str(a));
        });
    c.detail << cases << " expansions, exponent = |alpha| and degree = |alpha|+1";
    return {6, "scaling-consistency", c.ok, c.detail.str()};
}

inline CriterionResult c7_radial_identities() {
    detail::Check c;
    RadialSemisimple rad =
        radial_semisimple(detail::pair(), gl4::cartan_point(gl4::CartanLabel::PP, 1, 2).embed());
    c.require(rad.xi.constant_term() == 1, "xi(0) != 1");
    RadialSemisimple rad11 =
        radial_semisimple(detail::pair(), gl4::cartan_point(gl4::CartanLabel::PP, 1, 1).embed());
    c.require(rad11.xi.constant_term() == 1, "xi(0) != 1 at X_{++}(1,1)");

    std::size_t k = rad.split.z_minus.dim();
    std::vector<std::vector<double>> gi(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gi[i][j] = to_double(rad.split.gram_inv(i, j));

    auto fd_second = [&](const std::function<double(const std::vector<double>&)>& g,
                         std::vector<double> z, std::size_t i, std::size_t j, double h) {
        auto base = [&](double step) {
            if (i == j) {
                double zi = z[i];
                z[i] = zi + step;
                double fp = g(z);
                z[i] = zi - step;
                double fm = g(z);
                z[i] = zi;
                double f0 = g(z);
                return (fp - 2 * f0 + fm) / (step * step);
            }
            double zi = z[i], zj = z[j], acc = 0;
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    z[i] = zi + si * step;
                    z[j] = zj + sj * step;
                    acc += si * sj * g(z);
                }
            z[i] = zi;
            z[j] = zj;
            return acc / (4 * step * step);
        };
        double d1 = base(h), d2 = base(h / 2), d3 = base(h / 4);
        double r1 = (4 * d2 - d1) / 3, r2 = (4 * d3 - d2) / 3;
        return (16 * r2 - r1) / 15;
    };
    auto fd_lap = [&](const std::function<double(const std::vector<double>&)>& g,
                      const std::vector<double>& z) {
        double acc = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (gi[i][j] != 0) acc += gi[i][j] * fd_second(g, z, i, j, 0.02);
        return acc;
    };

    RationalSampler s(777, 3, 4);
    Poly f = Poly::var(0) * Poly::var(0) + Poly::var(1) * Rational(2);
    int done = 0;
    double worst_mu = 0, worst_dual = 0;
    while (done < 20) {
        std::vector<Rational> z{s(), s()};
        if (rad.xi.eval(z) <= Rational(1, 10)) continue;
        std::vector<double> zd{to_double(z[0]), to_double(z[1])};
        auto sqrt_xi = [&](const std::vector<double>& p) {
            return std::sqrt(rad.xi.eval_double(p));
        };
        double mu_fd = fd_lap(sqrt_xi, zd) / sqrt_xi(zd);
        double mu_exact = to_double(*rad.mu.eval(z));
        worst_mu = std::max(worst_mu,
                            std::abs(mu_exact - mu_fd) / std::max(1.0, std::abs(mu_fd)));

        auto g = [&](const std::vector<double>& p) {
            return std::sqrt(rad.xi.eval_double(p)) * f.eval_double(p);
        };
        double numeric = fd_lap(g, zd) / sqrt_xi(zd) - mu_exact * f.eval_double(zd);
        double exact = to_double(*rad.apply(f, z));
        worst_dual = std::max(worst_dual,
                              std::abs(exact - numeric) / std::max(1.0, std::abs(numeric)));
        ++done;
    }
    c.require(worst_mu <= 1e-6, "mu finite-difference mismatch");
    c.require(worst_dual <= 1e-9, "dual-path radial mismatch");
    c.detail << "xi(0) = 1 exactly; mu FD rel err " << worst_mu << " (20 points); dual path "
             << worst_dual;
    return {7, "radial-identities", c.ok, c.detail.str()};
}

inline CriterionResult c8_bessel() {
    detail::Check c;
    for (Rational lam : {Rational(1), Rational(2)})
        for (unsigned n = 1; n <= 50; ++n)
            c.require(4 * Rational(long(n)) * Rational(long(n)) * phi_coeff_exact(lam, n) ==
                          lam * phi_coeff_exact(lam, n - 1),
                      "recurrence fails at n = " + std::to_string(n));
    // lambda = i over the Gaussian rationals
    detail::GaussQ ci{1, 0}, lam_i{0, 1};
    for (unsigned n = 1; n <= 50; ++n) {
        detail::GaussQ next =
            ci * lam_i * (Rational(1) / (4 * Rational(long(n)) * Rational(long(n))));
        detail::GaussQ lhs = next * (4 * Rational(long(n)) * Rational(long(n)));
        detail::GaussQ rhs = lam_i * ci;
        c.require(lhs == rhs, "Gaussian recurrence fails at n = " + std::to_string(n));
        ci = next;
    }

    double worst_phi = 0, worst_w = 0;
    for (Cx lam : {Cx(1, 0), Cx(2, 0), Cx(0, 1)}) {
        for (double re : {-4.0, -2.0, -0.5, 0.25, 1.0, 2.5, 4.0})
            for (double im : {0.0, 1.0, -2.0})
                if (re * re + im * im <= 16.0)
                    worst_phi = std::max(worst_phi,
                                         bessel_residual(BesselKind::Phi, lam, Cx(re, im)));
        for (double t : {0.1, 0.3, 0.7, 1.0, 1.8, 2.6, 3.3, 4.0})
            worst_w = std::max(worst_w, bessel_residual(BesselKind::BigW, lam, t));
    }
    c.require(worst_phi <= 1e-9, "Phi residual above 1e-9");
    c.require(worst_w <= 1e-7, "W residual above 1e-7");
    c.detail << "recurrence exact to n = 50; Phi residual " << worst_phi << "; W residual "
             << worst_w;
    return {8, "bessel-system", c.ok, c.detail.str()};
}

inline CriterionResult c9_invariant_map() {
    detail::Check c;
    using namespace gl4;
    for (CartanLabel l : {CartanLabel::PP, CartanLabel::PM, CartanLabel::MM}) {
        auto [e1, e2] = cartan_signs(l);
        int n = 0;
        for (long p = 1; p <= 10 && n < 100; ++p)
            for (long q = 1; q <= 10 && n < 100; ++q, ++n) {
                Rational u1(p, 3), u2(q, 4);
                InvariantData d = invariants(cartan_point(l, u1, u2));
                c.require(d.nu_exact.has_value(), "non-exact eigenvalues on a rational point");
                if (!d.nu_exact) continue;
                Rational nu1 = e1 * u1 * u1, nu2 = e2 * u2 * u2;
                bool same = (d.nu_exact->first == nu1 && d.nu_exact->second == nu2) ||
                            (d.nu_exact->first == nu2 && d.nu_exact->second == nu1);
                c.require(same, "eigenvalue set mismatch");
                c.require(d.S0 == d.Q * d.Q - 4 * d.S, "S0 identity");
            }
    }
    RationalSampler s(31);
    QElement x = cartan_point(CartanLabel::PM, Rational(3, 2), Rational(1, 2));
    InvariantData d0 = invariants(x);
    int done = 0;
    while (done < 20) {
        MatQ a(2, 2), b(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a(i, j) = s();
                b(i, j) = s();
            }
        if (determinant(a) == 0 || determinant(b) == 0) continue;
        InvariantData d = invariants(conjugate(x, a, b));
        c.require(d.Q == d0.Q && d.S == d0.S, "invariants moved under conjugation");
        ++done;
    }
    c.detail << "300 rational grid points, eigenvalue sets exact; 20 conjugations exact";
    return {9, "invariant-map", c.ok, c.detail.str()};
}

inline CriterionResult c10_orbital() {
    detail::Check c;
    using namespace gl4;
    Bump f;
    f.radius = 2.6;
    f.kinvariant = true;

    OrbitalCfg cfg;
    cfg.tol = 1e-7;
    cfg.n_outer = 20;
    cfg.n_inner = 20;
    cfg.max_doublings = 4;
    double worst = 0;
    for (double u1 : {0.45, 0.7, 0.95, 1.3, 1.7})
        for (double u2 : {0.55, 0.8, 1.1, 1.45, 1.85}) {
            auto a = orbital_integral(f, 1, 1, u1, u2, OrbitalRoute::RS, cfg);
            auto b = orbital_integral(f, 1, 1, u1, u2, OrbitalRoute::XiEta, cfg);
            if (a.value == 0) continue;
            worst = std::max(worst, std::abs(a.value - b.value) / std::abs(a.value));
        }
    c.require(worst <= 1e-6, "route agreement above 1e-6");

    RationalSampler s(61, 5, 3);
    for (int t = 0; t < 40; ++t) {
        Rational u1 = s.nonzero(), u2 = s.nonzero();
        Rational ex = abs(s.nonzero()) + Rational(1, 7), ey = abs(s.nonzero()) + Rational(2, 5);
        for (int e1 : {1, -1})
            for (int e2 : {1, -1})
                c.require(rs_jacobian_exact(e1, e2, u1, u2, ex, ey) ==
                              Rational(e2) * u2 * u2 - Rational(e1) * u1 * u1,
                          "exact Jacobian identity");
    }
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> dd(-2.0, 2.0);
    double worst_jac = 0;
    for (int t = 0; t < 100; ++t) {
        double u1 = dd(rng), u2 = dd(rng), x = dd(rng), y = dd(rng);
        int e1 = rng() & 1 ? 1 : -1, e2 = rng() & 1 ? 1 : -1;
        double det = (u2 * std::exp(y)) * (e2 * u2 * std::exp(-y)) -
                     (-u1 * std::exp(x)) * (-e1 * u1 * std::exp(-x));
        worst_jac = std::max(worst_jac,
                             std::abs(std::abs(det) - std::abs(e2 * u2 * u2 - e1 * u1 * u1)));
    }
    c.require(worst_jac <= 1e-12, "float Jacobian identity above 1e-12");

    Bump g;
    g.radius = 2.0;
    g.kinvariant = true;
    LogBoundFit fit = fit_log_bound(g, 1, 1, 1e-3, 10, 12);
    c.require(fit.holds, "log bound violated on the grid");

    c.detail << "route agreement " << worst << "; Jacobian exact and to " << worst_jac
             << "; log bound holds with C = " << fit.c;
    return {10, "orbital-integrals", c.ok, c.detail.str()};
}

inline CriterionResult c11_integrability() {
    detail::Check c;
    using namespace gl4;
    SpectralParams sp{1.0, 2.0};
    Bump f;
    f.radius = 2.5;
    f.kinvariant = true;
    ProbeCfg cfg;
    cfg.k_max = 7;
    cfg.n_region = 5;
    cfg.n_orb = 8;
    cfg.n_a2_outer = 7;
    cfg.n_a2_inner = 6;

    auto rep_ana = probe_origin(
        [&](const InvariantsD& v) { return f_ana(v.nu1, v.nu2, sp).real(); }, f, cfg);
    c.require(!rep_ana.divergent && rep_ana.last_relative < 1e-4, "F_ana near 0");

    auto rep_sing = probe_origin(
        [&](const InvariantsD& v) {
            return std::abs(v.nu1) * std::abs(v.nu2) == 0.0
                       ? 0.0
                       : f_sing(v.nu1, v.nu2, sp).real();
        },
        f, cfg);
    c.require(!rep_sing.divergent && rep_sing.last_relative < 1e-4, "F_sing near 0");

    ProbeCfg ccfg = cfg;
    ccfg.k_max = 18;
    auto rep_plus = probe_coincidence(
        [&](const InvariantsD& v) {
            if (v.S0 <= 0) return 0.0;
            return f_plus(PlusKind::PhiPhi, v.S0, v.nu1, v.nu2, sp).real();
        },
        f, ccfg);
    c.require(!rep_plus.divergent && rep_plus.last_relative < 1e-4,
              "F+ near the coincidence set");

    ProbeCfg gcfg = cfg;
    gcfg.k_max = 12;
    auto rep_ctrl = probe_coincidence(
        [&](const InvariantsD& v) {
            double d = std::abs(v.nu1 - v.nu2);
            return d == 0 ? 0.0 : std::pow(d, -1.5);
        },
        f, gcfg);
    c.require(rep_ctrl.divergent, "non-integrable control not flagged");

    c.detail << "F_ana " << rep_ana.last_relative << ", F_sing " << rep_sing.last_relative
             << ", F+ " << rep_plus.last_relative << " all below 1e-4; control flagged";
    return {11, "integrability-probes", c.ok, c.detail.str()};
}

inline CriterionResult c12_weyl_consistency() {
    detail::Check c;
    using namespace gl4;
    // test function supported inside the S0 > 0 region: the a2 class
    // contributes nothing, which the pairing reports structurally
    Bump f;
    f.radius = 3.0;
    f.kinvariant = true;
    f.s0_lo = 0.4;
    f.s0_hi = 1.2;
    WeylCfg cfg;
    cfg.n_u = 20;
    cfg.n_orb = 14;
    WeylPairing wp(f, cfg);

    SpectralParams sp{1.0, 2.0};
    PairingFn one = [](const InvariantsD&) { return 1.0; };
    PairingFn fana = [&](const InvariantsD& v) { return f_ana(v.nu1, v.nu2, sp).real(); };

    auto p_one = wp.pair(one);
    auto p_ana = wp.pair(fana);
    auto mc = mc_integrals({one, fana}, f, 6000000, 4242);

    double kappa_fit = mc[0].value / p_one.total();
    double predicted = kappa_fit * p_ana.total();
    double rel = std::abs(predicted - mc[1].value) / std::abs(mc[1].value);
    c.require(rel <= 0.02, "calibrated pairing off by more than 2%");

    // F+ pairing on an unrestricted test function: the a2 term must vanish
    Bump g;
    g.radius = 2.2;
    g.kinvariant = true;
    WeylCfg cfg2;
    cfg2.n_u = 10;
    cfg2.n_orb = 8;
    cfg2.n_a2_grid = 6;
    cfg2.n_a2_outer = 6;
    cfg2.n_a2_inner = 6;
    WeylPairing wp2(g, cfg2);
    auto b = wp2.pair([&](const InvariantsD& v) {
        if (v.S0 <= 0) return 0.0;
        return f_plus(PlusKind::PhiPhi, v.S0, v.nu1, v.nu2, sp).real();
    });
    c.require(b.a2 == 0.0, "F+ pairing has a nonzero a2 term");
    c.require(b.total() != 0.0, "F+ pairing vanished entirely");

    c.detail << "calibrated agreement " << rel << " (<= 2%); calibration constant "
             << kappa_fit << " vs theoretical " << weyl_calibration_constant()
             << "; F+ a2 term = 0";
    return {12, "weyl-pairing-consistency", c.ok, c.detail.str()};
}

inline std::vector<CriterionResult> run_all() {
    using Fn = CriterionResult (*)();
    Fn fns[] = {c1_distinguished_equivalence,
                c2_niceness,
                c3_lambda_ladder,
                c4_degree_bookkeeping,
                c5_delta_monomials,
                c6_scaling,
                c7_radial_identities,
                c8_bessel,
                c9_invariant_map,
                c10_orbital,
                c11_integrability,
                c12_weyl_consistency};
    std::vector<CriterionResult> out;
    for (Fn fn : fns) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace sympair::acceptance
