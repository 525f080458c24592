#pragma once

#include "sympair/weyl.hpp"

namespace sympair::gl4 {

struct ProbeCfg {
    int k_max = 8;
    double r0 = 1.0;          // outermost shell / tube scale
    double tol = 1e-4;        // decay threshold, relative to the running total
    int n_region = 7;         // quadrature per axis per region piece
    int n_orb = 10;           // orbital quadrature inside regions
    int n_a2_outer = 8, n_a2_inner = 7;
    bool include_a2 = true;
};

struct ProbeReport {
    std::vector<double> contributions;  // one partial integral per region
    double total = 0;
    double last_relative = 0;
    bool divergent = false;
};

namespace detail {

inline double rect_split_piece(const PairingFn& F, const Bump& f, int e1, int e2, double a1,
                               double b1, double a2, double b2, const ProbeCfg& cfg) {
    if (b1 <= a1 || b2 <= a2) return 0;
    const QuadRule& q = gauss_legendre(cfg.n_region);
    double chamber = (e1 == e2) ? 0.5 : 1.0;
    double acc = 0;
    for (int i = 0; i < cfg.n_region; ++i) {
        double u1 = a1 + (b1 - a1) * (q.x[i] + 1) / 2;
        for (int j = 0; j < cfg.n_region; ++j) {
            double u2 = a2 + (b2 - a2) * (q.x[j] + 1) / 2;
            double dd = e1 * u1 * u1 - e2 * u2 * u2;
            if (dd == 0) continue;
            double fv = F(split_invariants(e1, e2, u1, u2));
            if (fv == 0) continue;
            double m = detail::m_value(f, e1, e2, u1, u2, cfg.n_orb);
            acc += q.w[i] * q.w[j] * fv * m * std::abs(u1 * u2 * dd);
        }
    }
    return chamber * acc * (b1 - a1) * (b2 - a2) / 4;
}

inline double rect_a2_piece(const PairingFn& F, const Bump& f, double a1, double b1, double a2,
                            double b2, const ProbeCfg& cfg) {
    if (b1 <= a1 || b2 <= a2) return 0;
    const QuadRule& q = gauss_legendre(cfg.n_region);
    double acc = 0;
    for (int i = 0; i < cfg.n_region; ++i) {
        double th = a1 + (b1 - a1) * (q.x[i] + 1) / 2;
        for (int j = 0; j < cfg.n_region; ++j) {
            double ta = a2 + (b2 - a2) * (q.x[j] + 1) / 2;
            double fv = F(a2_invariants(th, ta));
            if (fv == 0) continue;
            double m = detail::a2_slice_integral(f, th, ta, cfg.n_a2_outer, cfg.n_a2_inner);
            if (m == 0) continue;
            double jac = 64 * th * th * ta * ta * (th * th + ta * ta) / (2 * M_PI);
            acc += q.w[i] * q.w[j] * fv * m * jac;
        }
    }
    return acc * (b1 - a1) * (b2 - a2) / 4;
}

inline ProbeReport finalize(ProbeReport rep, double tol) {
    for (double c : rep.contributions) rep.total += c;
    double scale = std::max(std::abs(rep.total), 1e-30);
    rep.last_relative = std::abs(rep.contributions.back()) / scale;
    // Cauchy criterion at the probed resolution: the shell/tube contributions
    // are the increments of the partial-integral sequence
    rep.divergent = rep.last_relative > tol;
    return rep;
}

}  // namespace detail

/// Partial integrals of |F| against the Weyl density over shrinking sup-norm
/// shells around u = 0 (all split classes, plus the a2 class for functions
/// supported there). The k-th contribution is the integral over
/// { 2^-(k+1) r0 < max(u1,u2) <= 2^-k r0 }.
inline ProbeReport probe_origin(const PairingFn& F, const Bump& f, const ProbeCfg& cfg = {}) {
    ProbeReport rep;
    auto absF = [&](const InvariantsD& i) { return std::abs(F(i)); };
    for (int k = 0; k <= cfg.k_max; ++k) {
        double hi = cfg.r0 * std::pow(0.5, k), lo = hi / 2;
        double c = 0;
        for (auto [e1, e2] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}}) {
            c += detail::rect_split_piece(absF, f, e1, e2, lo, hi, 0, hi, cfg);
            c += detail::rect_split_piece(absF, f, e1, e2, 0, lo, lo, hi, cfg);
        }
        if (cfg.include_a2 && f.kinvariant && !f.excludes_negative_s0()) {
            c += detail::rect_a2_piece(absF, f, lo, hi, 0, hi, cfg);
            c += detail::rect_a2_piece(absF, f, 0, lo, lo, hi, cfg);
        }
        rep.contributions.push_back(c);
    }
    return detail::finalize(std::move(rep), cfg.tol);
}

/// Partial integrals of |F| against the Weyl density over shrinking tubes
/// around the coincidence set nu1 = nu2 inside the ++ and -- classes:
/// u1 = a + d/2, u2 = a - d/2 with d in (2^-(k+1) d0, 2^-k d0].
inline ProbeReport probe_coincidence(const PairingFn& F, const Bump& f,
                                     const ProbeCfg& cfg = {}) {
    ProbeReport rep;
    auto absF = [&](const InvariantsD& i) { return std::abs(F(i)); };
    double umax = f.entry_bound();
    double a_lo = 0.2 * umax, a_hi = 0.7 * umax;
    double d0 = cfg.r0 * 0.5 * a_lo;
    const QuadRule& q = gauss_legendre(cfg.n_region);
    for (int k = 0; k <= cfg.k_max; ++k) {
        double dhi = d0 * std::pow(0.5, k), dlo = dhi / 2;
        double c = 0;
        for (int e : {1, -1}) {
            for (int i = 0; i < cfg.n_region; ++i) {
                double a = a_lo + (a_hi - a_lo) * (q.x[i] + 1) / 2;
                for (int j = 0; j < cfg.n_region; ++j) {
                    double d = dlo + (dhi - dlo) * (q.x[j] + 1) / 2;
                    double u1 = a + d / 2, u2 = a - d / 2;
                    double dd = double(e) * (u1 * u1 - u2 * u2);
                    double fv = absF(split_invariants(e, e, u1, u2));
                    if (fv == 0) continue;
                    double m = detail::m_value(f, e, e, u1, u2, cfg.n_orb);
                    c += q.w[i] * q.w[j] * fv * m * std::abs(u1 * u2 * dd);
                }
            }
        }
        // chamber weight: the tube lies in the u1 > u2 half of the square
        c *= (a_hi - a_lo) * (dhi - dlo) / 4;
        rep.contributions.push_back(c);
    }
    return detail::finalize(std::move(rep), cfg.tol);
}

struct LogBoundFit {
    double c = 0;        // fitted constant, with C1 = C2 = 1
    bool holds = false;  // bound verified on the fine grid with 15% headroom
    double max_ratio = 0;
};

/// Fits M(f)(X_eps(u)) <= C (1 + |log u1|)(1 + |log u2|) over a log-spaced
/// grid on [u_lo, 1]^2: the constant comes from a coarse subgrid, the bound
/// is then checked on the full grid.
inline LogBoundFit fit_log_bound(const Bump& f, int e1, int e2, double u_lo = 1e-3,
                                 int n_grid = 10, int n_orb = 12) {
    LogBoundFit fit;
    std::vector<double> us(n_grid);
    for (int i = 0; i < n_grid; ++i)
        us[i] = std::exp(std::log(u_lo) * (1.0 - double(i) / (n_grid - 1)));
    std::vector<std::vector<double>> m(n_grid, std::vector<double>(n_grid));
    for (int i = 0; i < n_grid; ++i)
        for (int j = 0; j < n_grid; ++j) {
            if (e1 == e2 && us[i] == us[j]) {
                m[i][j] = 0;
                continue;
            }
            m[i][j] = detail::m_value(f, e1, e2, us[i], us[j], n_orb);
        }
    auto envelope = [&](int i, int j) {
        return (1 + std::abs(std::log(us[i]))) * (1 + std::abs(std::log(us[j])));
    };
    for (int i = 0; i < n_grid; i += 2)
        for (int j = 0; j < n_grid; j += 2) fit.c = std::max(fit.c, m[i][j] / envelope(i, j));
    double cap = fit.c * 1.15 + 1e-12;
    fit.holds = true;
    for (int i = 0; i < n_grid; ++i)
        for (int j = 0; j < n_grid; ++j) {
            double ratio = m[i][j] / envelope(i, j);
            fit.max_ratio = std::max(fit.max_ratio, ratio);
            if (ratio > cap) fit.holds = false;
        }
    return fit;
}

}  // namespace sympair::gl4
