#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "sympair/orbital.hpp"

namespace sympair::gl4 {

/// Real-valued invariant function of a point, seen through its invariants.
using PairingFn = std::function<double(const InvariantsD&)>;

inline InvariantsD split_invariants(int e1, int e2, double u1, double u2) {
    Q8 p;
    p.y = {u1, 0, 0, u2};
    p.z = {e1 * u1, 0, 0, e2 * u2};
    return invariants_d(p);
}

inline Q8 a2_point_d(double theta, double tau) {
    Q8 p;
    p.y = {tau, -theta, theta, tau};
    p.z = p.y;
    return p;
}

inline InvariantsD a2_invariants(double theta, double tau) {
    return invariants_d(a2_point_d(theta, tau));
}

struct WeylCfg {
    int n_u = 20;           // u-grid per axis and split class
    int n_orb = 12;         // orbital quadrature per axis (fixed, not adaptive)
    int n_a2_grid = 10;     // (theta, tau) grid per axis
    int n_a2_outer = 9;     // a2 slice quadrature, (x, y, w) axes
    int n_a2_inner = 8;     // a2 slice quadrature, (xi, eta) axes
    bool include_a2 = true;
};

namespace detail {

inline double m_value(const Bump& f, int e1, int e2, double u1, double u2, int n) {
    OrbitalCfg oc;
    oc.n_outer = n;
    oc.n_inner = n;
    oc.adaptive = false;
    return orbital_integral(f, e1, e2, u1, u2, OrbitalRoute::RS, oc).value;
}

}  // namespace detail

/// a2 orbit point h . X_2(theta, tau) for the stabilizer slice
/// h = (n_xi, n_eta) (diag(e^x, e^y), diag(e^w, 1)).
inline Q8 a2_orbit_point(double theta, double tau, double xi, double eta, double x, double y,
                         double w) {
    M2 R = {tau, -theta, theta, tau};
    M2 A = m2_mul(upper_unipotent(xi), diag2(std::exp(x), std::exp(y)));
    M2 B = m2_mul(upper_unipotent(eta), diag2(std::exp(w), 1.0));
    Q8 p;
    p.y = m2_mul(m2_mul(A, R), m2_inv(B));
    p.z = m2_mul(m2_mul(B, R), m2_inv(A));
    return p;
}

namespace detail {

/// Intersection of |a t + b| <= rm intervals; returns false when empty.
inline bool affine_interval(double a, double b, double rm, double& lo, double& hi) {
    double l = (-rm - b) / a, h = (rm - b) / a;
    if (l > h) std::swap(l, h);
    lo = std::max(lo, l);
    hi = std::min(hi, h);
    return lo < hi;
}

/// 5-dim H-slice integral of a K-invariant f over the orbit of X_2(theta,tau),
/// weighted by the slice density e^{-w} (the coordinate frame of the
/// (n, a)-slice is not left-invariant in the second block factor; the
/// measured orbit-map Jacobian is 64 th^2 ta^2 (th^2+ta^2) e^{-w}).
///
/// The support projects into an explicit polytope in (x, y, w): with
/// R the support radius, c^2 = th^2 + ta^2,
///   c3 = log(R^2/(2c^2))   from |det Y'|, |det Z'| <= R^2/2,
///   G  = log(R^2/(4 ta th)) from the (2,1)/(1,2) entries of Y'Z' = A R^2 A^-1
///        and Z'Y' = B R^2 B^-1,
/// one gets x >= log(th/R), |x - y| <= G, |w| <= G, |x + y - w| <= c3 and
/// w >= y - log(R/th). Nested Gauss-Legendre over that polytope; the
/// (xi, eta) ranges per node come from the affine entry constraints.
inline double a2_slice_integral(const Bump& f, double theta, double tau, int n_outer,
                                int n_inner) {
    double rr = f.entry_bound();
    double c2 = theta * theta + tau * tau;
    if (theta <= 0 || tau <= 0 || 2 * c2 > rr * rr || 4 * theta * tau > rr * rr) return 0;
    double c3 = std::log(rr * rr / (2 * c2));
    double g = std::log(rr * rr / (4 * theta * tau));

    const QuadRule& qo = gauss_legendre(n_outer);
    const QuadRule& qi = gauss_legendre(n_inner);
    double x_lo = std::log(theta / rr), x_hi = g + c3 / 2;
    if (x_hi <= x_lo) return 0;
    double total = 0;
    for (int ix = 0; ix < n_outer; ++ix) {
        double x = (x_lo + x_hi) / 2 + (x_hi - x_lo) / 2 * qo.x[ix];
        double wx = qo.w[ix] * (x_hi - x_lo) / 2;
        double ex = std::exp(x);
        double y_lo = x - g, y_hi = x + g;
        for (int iy = 0; iy < n_outer; ++iy) {
            double y = (y_lo + y_hi) / 2 + (y_hi - y_lo) / 2 * qo.x[iy];
            double wy = qo.w[iy] * (y_hi - y_lo) / 2;
            double w_lo = std::max({-g, x + y - c3, y - std::log(rr / theta)});
            double w_hi = std::min(g, x + y + c3);
            if (w_hi <= w_lo) continue;
            for (int iw = 0; iw < n_outer; ++iw) {
                double w = (w_lo + w_hi) / 2 + (w_hi - w_lo) / 2 * qo.x[iw];
                double ww = qo.w[iw] * (w_hi - w_lo) / 2;
                double eyw = std::exp(y - w), ey = std::exp(y), ew = std::exp(w);
                // xi from |Y'_11| and |Z'_22|, eta from |Z'_11| and |Y'_22|
                double xlo = -1e18, xhi = 1e18, elo = -1e18, ehi = 1e18;
                if (!affine_interval(theta * eyw, tau * std::exp(x - w), rr, xlo, xhi))
                    continue;
                if (!affine_interval(-theta / ex, tau * std::exp(-y), rr, xlo, xhi)) continue;
                if (!affine_interval(theta / ex, tau * ew / ex, rr, elo, ehi)) continue;
                if (!affine_interval(-theta * eyw, tau * ey, rr, elo, ehi)) continue;
                double xim = (xlo + xhi) / 2, xih = (xhi - xlo) / 2;
                double etm = (elo + ehi) / 2, eth = (ehi - elo) / 2;
                double cell = 0;
                for (int ia = 0; ia < n_inner; ++ia)
                    for (int ib = 0; ib < n_inner; ++ib) {
                        Q8 p = a2_orbit_point(theta, tau, xim + xih * qi.x[ia],
                                              etm + eth * qi.x[ib], x, y, w);
                        double v = f(p);
                        if (v != 0) cell += qi.w[ia] * qi.w[ib] * v;
                    }
                total += wx * wy * ww * cell * xih * eth / ew;
            }
        }
    }
    return total;
}

}  // namespace detail

/// Precomputed orbital data for repeated pairings against one test function.
/// Split classes integrate over fundamental domains: the triangle
/// u1 > u2 > 0 for ++/-- (as half of the symmetric square) and the full
/// quadrant square for +-; the a2 class over the quadrant theta, tau > 0.
/// With the measure conventions used here the pairing satisfies
/// integral_q F f dX = 16 pi^2 * pairing(F) for every invariant F.
class WeylPairing {
public:
    WeylPairing(const Bump& f, const WeylCfg& cfg = {}) : f_(f), cfg_(cfg) {
        double umax = f.entry_bound();
        const QuadRule& q = gauss_legendre(cfg.n_u);
        for (auto [e1, e2] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}}) {
            Class cl;
            cl.e1 = e1;
            cl.e2 = e2;
            double chamber = (e1 == e2) ? 0.5 : 1.0;
            for (int i = 0; i < cfg.n_u; ++i)
                for (int j = 0; j < cfg.n_u; ++j) {
                    Node nd;
                    nd.u1 = umax * (q.x[i] + 1) / 2;
                    nd.u2 = umax * (q.x[j] + 1) / 2;
                    if (e1 == e2 && nd.u1 == nd.u2) continue;
                    double glw = q.w[i] * q.w[j] * umax * umax / 4;
                    double dd = e1 * nd.u1 * nd.u1 - e2 * nd.u2 * nd.u2;
                    nd.weight = chamber * glw * std::abs(nd.u1 * nd.u2 * dd);
                    nd.m = detail::m_value(f, e1, e2, nd.u1, nd.u2, cfg.n_orb);
                    nd.inv = split_invariants(e1, e2, nd.u1, nd.u2);
                    cl.nodes.push_back(nd);
                }
            classes_.push_back(std::move(cl));
        }
        if (cfg.include_a2 && !f.excludes_negative_s0()) {
            if (!f.kinvariant)
                throw domain_error("a2 pairing term requires a K-invariant test function");
            double cmax = umax * std::sqrt(2.0);
            const QuadRule& qa = gauss_legendre(cfg.n_a2_grid);
            for (int i = 0; i < cfg.n_a2_grid; ++i)
                for (int j = 0; j < cfg.n_a2_grid; ++j) {
                    Node nd;
                    double th = cmax * (qa.x[i] + 1) / 2;
                    double ta = cmax * (qa.x[j] + 1) / 2;
                    nd.u1 = th;
                    nd.u2 = ta;
                    double glw = qa.w[i] * qa.w[j] * cmax * cmax / 4;
                    // slice Jacobian 64 theta^2 tau^2 (theta^2 + tau^2), one
                    // residual angle factor 2 pi relative to the split-class
                    // normalization
                    double jac = 64 * th * th * ta * ta * (th * th + ta * ta);
                    nd.weight = glw * jac / (2 * M_PI);
                    nd.m = detail::a2_slice_integral(f_, th, ta, cfg.n_a2_outer, cfg.n_a2_inner);
                    nd.inv = a2_invariants(th, ta);
                    a2_nodes_.push_back(nd);
                }
        }
    }

    struct Breakdown {
        double pp = 0, pm = 0, mm = 0, a2 = 0;
        double total() const { return pp + pm + mm + a2; }
    };

    Breakdown pair(const PairingFn& F) const {
        Breakdown b;
        double* slots[3] = {&b.pp, &b.pm, &b.mm};
        for (std::size_t c = 0; c < classes_.size(); ++c)
            for (const Node& nd : classes_[c].nodes) {
                double fv = F(nd.inv);
                if (fv != 0) *slots[c] += nd.weight * nd.m * fv;
            }
        for (const Node& nd : a2_nodes_) {
            double fv = F(nd.inv);
            if (fv != 0) b.a2 += nd.weight * nd.m * fv;
        }
        return b;
    }

    const Bump& test_function() const { return f_; }

private:
    struct Node {
        double u1, u2, weight, m;
        InvariantsD inv;
    };
    struct Class {
        int e1, e2;
        std::vector<Node> nodes;
    };
    Bump f_;
    WeylCfg cfg_;
    std::vector<Class> classes_;
    std::vector<Node> a2_nodes_;
};

/// The constant relating the pairing to the Lebesgue integral with these
/// measure conventions; exposed so tests can check it directly.
inline double weyl_calibration_constant() { return 16.0 * M_PI * M_PI; }

struct McResult {
    double value = 0;
    double std_error = 0;
};

/// Direct 8-dimensional Monte-Carlo of integral F(X) f(X) dX over the support
/// ball of f, uniform ball sampling, shared samples across all integrands.
inline std::vector<McResult> mc_integrals(const std::vector<PairingFn>& fs, const Bump& f,
                                          std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double R = f.radius;
    std::vector<double> sum(fs.size(), 0), sumsq(fs.size(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::array<double, 8> g;
        double norm2 = 0;
        for (auto& v : g) {
            v = gauss(rng);
            norm2 += v * v;
        }
        double scale = R * std::pow(unif(rng), 0.125) / std::sqrt(norm2);
        Q8 p;
        for (int i = 0; i < 4; ++i) {
            p.y[i] = f.center.y[i] + g[i] * scale;
            p.z[i] = f.center.z[i] + g[4 + i] * scale;
        }
        double fv = f(p);
        if (fv == 0) {
            continue;
        }
        InvariantsD inv = invariants_d(p);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            double v = fs[i](inv) * fv;
            sum[i] += v;
            sumsq[i] += v * v;
        }
    }
    double vol = std::pow(M_PI, 4.0) / 24.0 * std::pow(R, 8.0);
    std::vector<McResult> out(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        double mean = sum[i] / double(n);
        double var = sumsq[i] / double(n) - mean * mean;
        out[i].value = vol * mean;
        out[i].std_error = vol * std::sqrt(std::max(var, 0.0) / double(n));
    }
    return out;
}

}  // namespace sympair::gl4
