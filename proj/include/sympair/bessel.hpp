#pragma once

#include <cmath>
#include <complex>

#include "sympair/errors.hpp"
#include "sympair/rational.hpp"

namespace sympair {

using Cx = std::complex<double>;

struct SeriesConfig {
    int truncation = 40;
    double tolerance = 1e-12;
};

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// a(n) = -2 psi(n+1) = 2*gamma - 2*H_n, via harmonic numbers.
inline double digamma_coefficient(int n) {
    double h = 0;
    for (int k = 1; k <= n; ++k) h += 1.0 / k;
    return 2.0 * kEulerGamma - 2.0 * h;
}

enum class SeriesKind { Phi, SmallW };

struct SeriesValue {
    Cx f, df, d2f;        // value and first two z-derivatives
    double tail_bound = 0;
    int terms_used = 0;
};

/// Evaluates Phi_lambda(z) = sum (lambda z)^n / (4^n (n!)^2) or the companion
/// w_lambda (coefficients weighted by a(n)), together with termwise
/// derivatives. Entire series; the tail beyond the last term is bounded by a
/// geometric comparison once 4(n+1)^2 > 2|lambda z|, with |a| growing at most
/// logarithmically.
inline SeriesValue series_eval(SeriesKind kind, Cx lambda, Cx z, const SeriesConfig& cfg) {
    SeriesValue out;
    Cx lam_pow = 1.0;  // lambda^n / (4^n (n!)^2)
    Cx zp = 1.0;       // z^n
    Cx zpm1 = 0.0, zpm2 = 0.0;
    double azmax = std::abs(lambda) * std::abs(z);
    int n = 0;
    int hard_cap = std::max(cfg.truncation, 2 * int(std::sqrt(azmax)) + 30);
    double last_mag = 0;
    for (;;) {
        double weight = kind == SeriesKind::SmallW ? digamma_coefficient(n) : 1.0;
        Cx coef = lam_pow * weight;
        out.f += coef * zp;
        if (n >= 1) out.df += coef * double(n) * zpm1;
        if (n >= 2) out.d2f += coef * double(n) * double(n - 1) * zpm2;
        last_mag = std::abs(lam_pow) * std::pow(std::abs(z), n) *
                   (std::abs(weight) + 1.0) * (double(n) * double(n) + 1.0);
        bool far_enough = 4.0 * (n + 1.0) * (n + 1.0) > 2.0 * azmax;
        if (n >= cfg.truncation && far_enough && last_mag < cfg.tolerance) break;
        if (n > hard_cap + 400) break;
        ++n;
        zpm2 = zpm1;
        zpm1 = zp;
        zp *= z;
        lam_pow *= lambda / (4.0 * double(n) * double(n));
    }
    // ratio of consecutive terms is below 1/2 past the stopping index
    out.tail_bound = 2.0 * last_mag;
    out.terms_used = n + 1;
    return out;
}

inline Cx phi(Cx lambda, Cx z, const SeriesConfig& cfg = {}) {
    return series_eval(SeriesKind::Phi, lambda, z, cfg).f;
}
inline Cx small_w(Cx lambda, Cx z, const SeriesConfig& cfg = {}) {
    return series_eval(SeriesKind::SmallW, lambda, z, cfg).f;
}
inline Cx phi_prime(Cx lambda, Cx z, const SeriesConfig& cfg = {}) {
    return series_eval(SeriesKind::Phi, lambda, z, cfg).df;
}
inline Cx small_w_prime(Cx lambda, Cx z, const SeriesConfig& cfg = {}) {
    return series_eval(SeriesKind::SmallW, lambda, z, cfg).df;
}

inline bool on_negative_real_axis(Cx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

/// W_lambda = w_lambda + log(z) Phi_lambda with the principal logarithm;
/// defined off the closed negative real axis.
inline Cx big_w(Cx lambda, Cx z, const SeriesConfig& cfg = {}) {
    if (on_negative_real_axis(z))
        throw domain_error("W_lambda requires z outside (-inf, 0]");
    return small_w(lambda, z, cfg) + std::log(z) * phi(lambda, z, cfg);
}

/// W^r_lambda = w_lambda + log|t| Phi_lambda on the punctured real line.
inline Cx big_w_real(Cx lambda, double t, const SeriesConfig& cfg = {}) {
    if (t == 0.0) throw domain_error("W^r_lambda requires t != 0");
    return small_w(lambda, t, cfg) + std::log(std::abs(t)) * phi(lambda, t, cfg);
}

enum class BesselKind { Phi, SmallW, BigW, BigWReal };

/// Residual |L f - lambda f|(z) for L = 4(z d^2/dz^2 + d/dz), evaluated from
/// termwise-differentiated series (plus the exact log-derivative terms for
/// the W kinds).
inline double bessel_residual(BesselKind kind, Cx lambda, Cx z, const SeriesConfig& cfg = {}) {
    auto L_of = [&](const SeriesValue& s) { return 4.0 * (z * s.d2f + s.df); };
    switch (kind) {
        case BesselKind::Phi: {
            SeriesValue s = series_eval(SeriesKind::Phi, lambda, z, cfg);
            return std::abs(L_of(s) - lambda * s.f);
        }
        case BesselKind::SmallW: {
            // w alone is not an eigenfunction: L w - lambda w = -8 Phi'
            SeriesValue s = series_eval(SeriesKind::SmallW, lambda, z, cfg);
            SeriesValue p = series_eval(SeriesKind::Phi, lambda, z, cfg);
            return std::abs(L_of(s) - lambda * s.f + 8.0 * p.df);
        }
        case BesselKind::BigW:
        case BesselKind::BigWReal: {
            Cx lg;
            if (kind == BesselKind::BigW) {
                if (on_negative_real_axis(z)) throw domain_error("W residual off (-inf, 0]");
                lg = std::log(z);
            } else {
                if (z.imag() != 0.0 || z.real() == 0.0)
                    throw domain_error("W^r residual needs real z != 0");
                lg = std::log(std::abs(z.real()));
            }
            SeriesValue w = series_eval(SeriesKind::SmallW, lambda, z, cfg);
            SeriesValue p = series_eval(SeriesKind::Phi, lambda, z, cfg);
            // f = w + log(z) p:
            //   f'  = w' + p/z + log p'
            //   f'' = w'' - p/z^2 + 2p'/z + log p''
            Cx f = w.f + lg * p.f;
            Cx df = w.df + p.f / z + lg * p.df;
            Cx d2f = w.d2f - p.f / (z * z) + 2.0 * p.df / z + lg * p.d2f;
            return std::abs(4.0 * (z * d2f + df) - lambda * f);
        }
    }
    return 0;
}

/// Exact rational series coefficient c_n = lambda^n / (4^n (n!)^2).
inline Rational phi_coeff_exact(const Rational& lambda, unsigned n) {
    Rational num = rational_pow(lambda, n);
    Rational den = rational_pow(Rational(4), n) * Rational(factorial_int(n) * factorial_int(n));
    return num / den;
}

}  // namespace sympair
