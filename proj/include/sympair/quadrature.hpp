#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "sympair/errors.hpp"
#include "sympair/gl4.hpp"

namespace sympair {

struct QuadRule {
    std::vector<double> x, w;  // nodes and weights on [-1, 1]
};

/// Gauss-Legendre nodes by Newton iteration on P_n; cached per order.
inline const QuadRule& gauss_legendre(int n) {
    static std::map<int, QuadRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1);
        r.x[n - 1 - i] = x;
        r.w[n - 1 - i] = 2.0 / ((1 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

/// Integrates f over [a, b] with an n-point Gauss-Legendre rule.
inline double integrate_1d(const std::function<double(double)>& f, double a, double b, int n) {
    const QuadRule& r = gauss_legendre(n);
    double mid = (a + b) / 2, half = (b - a) / 2, s = 0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

/// C-infinity step: 0 for t <= 0, 1 for t >= 1.
inline double smoothstep(double t) {
    if (t <= 0) return 0;
    if (t >= 1) return 1;
    double a = std::exp(-1.0 / t), b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

/// Compactly supported smooth test function on q = R^8. order = 0 gives the
/// exponential bump exp(-1/(1-t)) in t = d^2/R^2; order m >= 1 gives the
/// C^{m-1} profile (1-t)^m. Optional smooth restriction to an S0-window and
/// an exact K-invariant mode (profile in ||Y||^2 + ||Z||^2 only).
struct Bump {
    gl4::Q8 center{};
    double radius = 2.0;
    int order = 0;
    bool kinvariant = false;
    double s0_lo = 0, s0_hi = 0;  // s0_hi > s0_lo enables the S0 cutoff

    double profile(double t) const {  // t = squared distance ratio
        if (t >= 1) return 0;
        if (order == 0) return std::exp(-1.0 / (1.0 - t) + 1.0);
        return std::pow(1.0 - t, order);
    }

    double operator()(const gl4::Q8& p) const {
        double d2 = 0;
        if (kinvariant) {
            for (int i = 0; i < 4; ++i) d2 += p.y[i] * p.y[i] + p.z[i] * p.z[i];
        } else {
            for (int i = 0; i < 4; ++i) {
                double dy = p.y[i] - center.y[i], dz = p.z[i] - center.z[i];
                d2 += dy * dy + dz * dz;
            }
        }
        double v = profile(d2 / (radius * radius));
        if (v != 0 && s0_hi > s0_lo) {
            gl4::InvariantsD inv = gl4::invariants_d(p);
            v *= smoothstep((inv.S0 - s0_lo) / (s0_hi - s0_lo));
        }
        return v;
    }

    /// Bound on any matrix entry over the support.
    double entry_bound() const {
        double c = 0;
        for (int i = 0; i < 4; ++i)
            c = std::max({c, std::abs(center.y[i]), std::abs(center.z[i])});
        return (kinvariant ? 0.0 : c) + radius;
    }

    /// True when the cutoff makes the bump vanish on every orbit with S0 < 0.
    bool excludes_negative_s0() const { return s0_hi > s0_lo && s0_lo >= 0; }
};

}  // namespace sympair
