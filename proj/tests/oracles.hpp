#pragma once

// Independent numeric oracles used by the unit and acceptance suites. These
// deliberately avoid the library's symbolic code paths: derivatives come from
// finite differences and Jacobian determinants from direct elimination on the
// assembled matrices.

#include <cmath>
#include <functional>
#include <vector>

#include "sympair/linalg.hpp"
#include "sympair/pair.hpp"
#include "sympair/radial.hpp"

namespace oracles {

using sympair::MatQ;
using sympair::Rational;
using sympair::VecQ;

/// Central second partial d2 g / dz_i dz_j with two-level Richardson
/// extrapolation (leading error O(h^6)).
inline double fd_second_partial(const std::function<double(const std::vector<double>&)>& g,
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
        double zi = z[i], zj = z[j];
        double acc = 0;
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
}

/// Finite-difference Laplacian of g for the quadratic form with inverse Gram
/// matrix ginv (dense double).
inline double fd_form_laplacian(const std::function<double(const std::vector<double>&)>& g,
                                const std::vector<double>& z,
                                const std::vector<std::vector<double>>& ginv, double h) {
    double acc = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (ginv[i][j] == 0) continue;
            acc += ginv[i][j] * fd_second_partial(g, z, i, j, h);
        }
    return acc;
}

/// Exact determinant of the transverse map eta_Z at a rational point,
/// assembled directly from brackets (independent of the symbolic xi).
inline Rational eta_determinant_at(const sympair::SymmetricPair& pair,
                                   const sympair::TransverseSplit& sp, const MatQ& z_point) {
    std::size_t dimq = pair.q_space.dim();
    MatQ m(dimq, dimq);
    std::size_t col = 0;
    auto put = [&](const MatQ& img) {
        auto c = sympair::coordinates_in(pair.q_space.coords(), img.flat(), pair.n * pair.n);
        for (std::size_t i = 0; i < dimq; ++i) m(i, col) = (*c)[i];
        ++col;
    };
    for (const auto& b : sp.z_minus.basis) put(b);
    MatQ target = sp.a0 + z_point;
    for (const auto& v : sp.v_plus.basis) put(sympair::bracket(v, target));
    return sympair::determinant(m);
}

}  // namespace oracles
