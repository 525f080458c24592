#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "sympair/quadrature.hpp"

namespace sympair::gl4 {

/// 2x2 double matrices, row-major.
using M2 = std::array<double, 4>;

inline M2 m2_mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline M2 m2_inv(const M2& a) {
    double d = a[0] * a[3] - a[1] * a[2];
    return {a[3] / d, -a[1] / d, -a[2] / d, a[0] / d};
}

inline M2 upper_unipotent(double s) { return {1, s, 0, 1}; }
inline M2 diag2(double a, double b) { return {a, 0, 0, b}; }
inline M2 rotation(double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return {c, -s, s, c};
}

/// Orbit point h . X_eps(u) for h = (n_xi, n_eta) diag(e^x, e^y, 1, 1):
///   Y = (u1 e^x, -eta u1 e^x + xi u2 e^y; 0, u2 e^y)
///   Z = (e1 u1 e^-x, -xi e1 u1 e^-x + eta e2 u2 e^-y; 0, e2 u2 e^-y).
inline Q8 orbit_point_xieta(int e1, int e2, double u1, double u2, double x, double y, double xi,
                            double eta) {
    double ex = std::exp(x), ey = std::exp(y);
    M2 A = m2_mul(upper_unipotent(xi), diag2(ex, ey));
    M2 B = upper_unipotent(eta);
    M2 Y = m2_mul(m2_mul(A, diag2(u1, u2)), m2_inv(B));
    M2 Z = m2_mul(m2_mul(B, diag2(e1 * u1, e2 * u2)), m2_inv(A));
    Q8 p;
    p.y = Y;
    p.z = Z;
    return p;
}

/// The same orbit point in the (r, s) coordinates
///   r = xi u2 e^y - eta u1 e^x,  s = -xi e1 u1 e^-x + eta e2 u2 e^-y,
/// in which the off-diagonal entries are r and s directly and the Jacobian
/// |det d(r,s)/d(xi,eta)| = |e1 u1^2 - e2 u2^2| cancels the orbital prefactor.
inline Q8 orbit_point_rs(int e1, int e2, double u1, double u2, double x, double y, double r,
                         double s) {
    double ex = std::exp(x), ey = std::exp(y);
    Q8 p;
    p.y = {u1 * ex, r, 0, u2 * ey};
    p.z = {e1 * u1 / ex, s, 0, e2 * u2 / ey};
    return p;
}

/// K-average of f at a point over O(2) x O(2) (trapezoid on angles, exact
/// average over the four reflection components). Skipped when f is built
/// K-invariant.
inline double k_average(const Bump& f, const Q8& p, int n_angle) {
    if (f.kinvariant) return f(p);
    double acc = 0;
    const M2 refl = {1, 0, 0, -1};
    for (int c = 0; c < 4; ++c) {
        bool r1 = c & 1, r2 = c & 2;
        for (int i = 0; i < n_angle; ++i)
            for (int j = 0; j < n_angle; ++j) {
                double p1 = 2 * M_PI * i / n_angle, p2 = 2 * M_PI * j / n_angle;
                M2 k1 = rotation(p1), k2 = rotation(p2);
                if (r1) k1 = m2_mul(k1, refl);
                if (r2) k2 = m2_mul(k2, refl);
                Q8 q;
                M2 Y = m2_mul(m2_mul(k1, p.y), m2_inv(k2));
                M2 Z = m2_mul(m2_mul(k2, p.z), m2_inv(k1));
                q.y = Y;
                q.z = Z;
                acc += f(q);
            }
    }
    return acc / (4.0 * n_angle * n_angle);
}

enum class OrbitalRoute { XiEta, RS };

struct OrbitalCfg {
    int n_outer = 16;       // per axis on (x, y)
    int n_inner = 16;       // per axis on (xi, eta) or (r, s)
    int n_angle = 12;       // K-average resolution per circle
    double tol = 1e-7;      // relative tolerance for refinement
    int max_doublings = 3;
    bool adaptive = true;
};

struct OrbitalResult {
    double value = 0;
    double err_estimate = 0;
    int n_used = 0;
};

namespace detail {

inline double orbital_pass(const Bump& f, int e1, int e2, double u1, double u2,
                           OrbitalRoute route, int n_outer, int n_inner, int n_angle) {
    double rm = f.entry_bound();
    if (std::abs(u1) > rm || std::abs(u2) > rm || u1 == 0 || u2 == 0) return 0;
    double xmax = std::log(rm / std::abs(u1));
    double ymax = std::log(rm / std::abs(u2));
    if (xmax <= 0 || ymax <= 0) return 0;
    double dd = double(e2) * u2 * u2 - double(e1) * u1 * u1;
    if (dd == 0) throw non_regular("orbital integral needs e1 u1^2 != e2 u2^2");

    const QuadRule& qo = gauss_legendre(n_outer);
    const QuadRule& qi = gauss_legendre(n_inner);
    double total = 0;
    for (int ix = 0; ix < n_outer; ++ix) {
        double x = xmax * qo.x[ix];
        for (int iy = 0; iy < n_outer; ++iy) {
            double y = ymax * qo.x[iy];
            double wxy = qo.w[ix] * xmax * qo.w[iy] * ymax;
            double cell = 0;
            if (route == OrbitalRoute::RS) {
                // the off-diagonal entries are r and s themselves
                for (int ia = 0; ia < n_inner; ++ia)
                    for (int ib = 0; ib < n_inner; ++ib) {
                        Q8 p = orbit_point_rs(e1, e2, u1, u2, x, y, rm * qi.x[ia],
                                              rm * qi.x[ib]);
                        double v = k_average(f, p, n_angle);
                        if (v != 0) cell += qi.w[ia] * qi.w[ib] * v;
                    }
                cell *= rm * rm;
            } else {
                // support in (xi, eta) is the parallelogram cut by the two
                // strips |Y'_12| <= rm, |Z'_12| <= rm; eta is resolved as an
                // exact interval for each xi node
                double ex = std::exp(x), ey = std::exp(y);
                double amax = (std::abs(u2 / ey) + std::abs(u1 * ex)) * rm / std::abs(dd);
                for (int ia = 0; ia < n_inner; ++ia) {
                    double xi = amax * qi.x[ia];
                    // |xi u2 e^y - eta u1 e^x| <= rm
                    double c1 = xi * u2 * ey, d1 = u1 * ex;
                    double lo1 = (c1 - rm) / d1, hi1 = (c1 + rm) / d1;
                    if (lo1 > hi1) std::swap(lo1, hi1);
                    // |-xi e1 u1 e^-x + eta e2 u2 e^-y| <= rm
                    double c2 = xi * e1 * u1 / ex, d2 = e2 * u2 / ey;
                    double lo2 = (c2 - rm) / d2, hi2 = (c2 + rm) / d2;
                    if (lo2 > hi2) std::swap(lo2, hi2);
                    double lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
                    if (lo >= hi) continue;
                    double mid = (lo + hi) / 2, half = (hi - lo) / 2;
                    double strip = 0;
                    for (int ib = 0; ib < n_inner; ++ib) {
                        Q8 p = orbit_point_xieta(e1, e2, u1, u2, x, y, xi,
                                                 mid + half * qi.x[ib]);
                        double v = k_average(f, p, n_angle);
                        if (v != 0) strip += qi.w[ib] * v;
                    }
                    cell += qi.w[ia] * strip * half;
                }
                cell *= amax;
            }
            total += wxy * cell;
        }
    }
    if (route == OrbitalRoute::XiEta) total *= std::abs(dd);
    return total;
}

}  // namespace detail

/// Orbital integral M(f)(X_eps(u1, u2)) = |nu1 - nu2| * integral of the
/// K-averaged f over the unipotent and split directions, in either the
/// paper's (xi, eta) coordinates or the substituted (r, s) coordinates.
inline OrbitalResult orbital_integral(const Bump& f, int e1, int e2, double u1, double u2,
                                      OrbitalRoute route, const OrbitalCfg& cfg = {}) {
    OrbitalResult res;
    int n_outer = cfg.n_outer, n_inner = cfg.n_inner;
    double prev = detail::orbital_pass(f, e1, e2, u1, u2, route, n_outer, n_inner, cfg.n_angle);
    res.value = prev;
    res.n_used = n_outer;
    if (!cfg.adaptive) return res;
    for (int k = 0; k < cfg.max_doublings; ++k) {
        n_outer = n_outer * 3 / 2;
        n_inner = n_inner * 3 / 2;
        double cur =
            detail::orbital_pass(f, e1, e2, u1, u2, route, n_outer, n_inner, cfg.n_angle);
        res.err_estimate = std::abs(cur - prev);
        res.value = cur;
        res.n_used = n_outer;
        if (res.err_estimate <= cfg.tol * std::max(1.0, std::abs(cur))) return res;
        prev = cur;
    }
    if (res.err_estimate > cfg.tol * std::max(1.0, std::abs(res.value)))
        throw quadrature_nonconvergence("orbital integral refinement stalled");
    return res;
}

/// Exact check of the linear change of variables: the matrix of
/// d(r,s)/d(xi,eta) with exact rational stand-ins for e^x, e^y has
/// determinant e2 u2^2 - e1 u1^2 identically.
inline Rational rs_jacobian_exact(int e1, int e2, const Rational& u1, const Rational& u2,
                                  const Rational& ex, const Rational& ey) {
    MatQ m(2, 2);
    m(0, 0) = u2 * ey;
    m(0, 1) = -(u1 * ex);
    m(1, 0) = -(Rational(e1) * u1 / ex);
    m(1, 1) = Rational(e2) * u2 / ey;
    return determinant(m);
}

}  // namespace sympair::gl4
