#pragma once

#include <optional>
#include <vector>

#include "sympair/errors.hpp"
#include "sympair/jordan.hpp"
#include "sympair/pair.hpp"
#include "sympair/poly.hpp"
#include "sympair/sl2.hpp"

namespace sympair {

/// Exact rational function, stored as an unreduced numerator/denominator pair.
struct RatFn {
    Poly num, den = Poly(Rational(1));

    std::optional<Rational> eval(const std::vector<Rational>& x) const {
        Rational d = den.eval(x);
        if (d == 0) return std::nullopt;
        return num.eval(x) / d;
    }

    double eval_double(const std::vector<double>& x) const {
        return num.eval_double(x) / den.eval_double(x);
    }

    bool is_zero() const { return num.is_zero(); }
};

/// Transverse data at a semisimple A0 in q:
///   q = z^- ⊕ V^- with z^- = q_{A0}, V^- = [A0, h]
///   h = z^+ ⊕ V^+ with z^+ = h_{A0}, V^+ = [A0, q].
/// Coordinates on z^- are taken in the stored basis; gram/gram_inv hold the
/// restriction of the invariant form to z^-.
struct TransverseSplit {
    MatQ a0;
    Subspace z_minus, v_minus, z_plus, v_plus;
    MatQ gram, gram_inv;
};

inline TransverseSplit transverse_split(const SymmetricPair& pair, const MatQ& a0) {
    if (!a0.is_zero() && classify(a0) != ElementKind::Semisimple)
        throw not_semisimple("transverse split requires semisimple A0");
    if (!pair.in_q(a0)) throw domain_error("A0 must lie in q");
    TransverseSplit sp;
    sp.a0 = a0;
    sp.z_minus = centralizer(pair.q_space, a0);
    sp.v_minus = ad_image(a0, pair.h_space);
    sp.z_plus = centralizer(pair.h_space, a0);
    sp.v_plus = ad_image(a0, pair.q_space);
    if (sp.z_minus.dim() + sp.v_minus.dim() != pair.q_space.dim() ||
        sp.z_plus.dim() + sp.v_plus.dim() != pair.h_space.dim() ||
        sp.v_minus.dim() != sp.v_plus.dim())
        throw Error("TransverseSplit", "direct sum check failed");

    std::size_t k = sp.z_minus.dim();
    sp.gram = MatQ(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sp.gram(i, j) = trace_form(sp.z_minus.basis[i], sp.z_minus.basis[j]);
    auto inv = inverse(sp.gram);
    if (!inv) throw Error("TransverseSplit", "form degenerates on z^-");
    sp.gram_inv = *inv;
    return sp;
}

/// Jacobian polynomial xi(Z) = det(eta_Z o eta_0^{-1}) for the map
/// eta_Z(v, W) = W + [v, A0 + Z] from V^+ x z^- onto q. Entries of the matrix
/// of eta_Z are affine in the z^- coordinates, so xi is an exact polynomial
/// with xi(0) = 1 and degree at most dim V^-.
inline Poly xi_polynomial(const TransverseSplit& sp, const SymmetricPair& pair) {
    std::size_t k = sp.z_minus.dim(), vp = sp.v_plus.dim();
    std::size_t dimq = pair.q_space.dim();
    if (k + vp != dimq) throw singular_base_map("eta_0 domain dimension mismatch");

    // column coordinates of eta_Z images in the q basis
    auto q_coords = [&](const MatQ& x) {
        auto c = coordinates_in(pair.q_space.coords(), x.flat(), pair.n * pair.n);
        if (!c) throw singular_base_map("eta image left q");
        return *c;
    };

    std::vector<std::vector<Poly>> m(dimq, std::vector<Poly>(dimq, Poly()));
    // W-columns: constant
    for (std::size_t j = 0; j < k; ++j) {
        VecQ col = q_coords(sp.z_minus.basis[j]);
        for (std::size_t i = 0; i < dimq; ++i) m[i][j] = Poly(col[i]);
    }
    // v-columns: [v, A0] + sum_t z_t [v, b_t]
    for (std::size_t j = 0; j < vp; ++j) {
        VecQ c0 = q_coords(bracket(sp.v_plus.basis[j], sp.a0));
        for (std::size_t i = 0; i < dimq; ++i) m[i][k + j] = Poly(c0[i]);
        for (std::size_t t = 0; t < k; ++t) {
            VecQ ct = q_coords(bracket(sp.v_plus.basis[j], sp.z_minus.basis[t]));
            for (std::size_t i = 0; i < dimq; ++i)
                m[i][k + j] += Poly::var(static_cast<std::uint32_t>(t)) * Poly(ct[i]);
        }
    }

    Poly det = poly_determinant(m);
    Rational det0 = det.constant_term();
    if (det0 == 0) throw singular_base_map("eta_0 is singular");
    return det * (1 / det0);
}

/// mu = xi^{-1/2} (d(omega_{z^-}) xi^{1/2}) expanded by the chain rule:
/// mu = (2 xi Lap(xi) - <grad xi, grad xi>) / (4 xi^2), where Lap and the
/// pairing use the inverse Gram matrix of the form on z^-. Square roots
/// never appear; the result is an exact rational function.
inline RatFn mu_rational(const TransverseSplit& sp, const Poly& xi) {
    std::size_t k = sp.z_minus.dim();
    std::vector<Poly> grad(k);
    for (std::size_t i = 0; i < k; ++i) grad[i] = xi.derivative(static_cast<std::uint32_t>(i));

    Poly lap;  // sum_ij Ginv_ij d_i d_j xi
    Poly pair_grad;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rational g = sp.gram_inv(i, j);
            if (g == 0) continue;
            lap += grad[i].derivative(static_cast<std::uint32_t>(j)) * g;
            pair_grad += grad[i] * grad[j] * g;
        }

    RatFn mu;
    mu.num = xi * lap * Rational(2) - pair_grad;
    mu.den = xi * xi * Rational(4);
    return mu;
}

/// The radial part of d(omega) at A0 in first-order-corrected form:
///   Rad f = Lap_omega f + xi^{-1} <grad xi, grad f>_omega,
/// equal to xi^{-1/2} Lap_omega (xi^{1/2} f) - mu f on ' z^-.
struct RadialSemisimple {
    TransverseSplit split;
    Poly xi;
    std::vector<Poly> grad_xi;
    RatFn mu;

    /// Exact value of (Rad f)(z) for a polynomial f in the z^- coordinates.
    std::optional<Rational> apply(const Poly& f, const std::vector<Rational>& z) const {
        std::size_t k = split.z_minus.dim();
        Rational xival = xi.eval(z);
        if (xival == 0) return std::nullopt;
        Rational acc = 0;
        for (std::size_t i = 0; i < k; ++i) {
            Poly fi = f.derivative(static_cast<std::uint32_t>(i));
            for (std::size_t j = 0; j < k; ++j) {
                Rational g = split.gram_inv(i, j);
                if (g == 0) continue;
                acc += g * fi.derivative(static_cast<std::uint32_t>(j)).eval(z);
                acc += g * grad_xi[j].eval(z) * fi.eval(z) / xival;
            }
        }
        return acc;
    }
};

inline RadialSemisimple radial_semisimple(const SymmetricPair& pair, const MatQ& a0) {
    RadialSemisimple r;
    r.split = transverse_split(pair, a0);
    r.xi = xi_polynomial(r.split, pair);
    std::size_t k = r.split.z_minus.dim();
    for (std::size_t i = 0; i < k; ++i)
        r.grad_xi.push_back(r.xi.derivative(static_cast<std::uint32_t>(i)));
    r.mu = mu_rational(r.split, r.xi);
    return r;
}

/// lambda_alpha ladder attached to a weight decomposition:
///   lambda_alpha = -2(alpha_1 + 2) + dim z_s^- - sum_{i>=2} (n_i + 2)(alpha_i + 1).
/// The equivalent form -delta_q - [2 alpha_1 + sum_{i>=2} (n_i+2) alpha_i]
/// is recomputed on every call and must agree.
inline long lambda_alpha(const WeightData& wd, const std::vector<int>& alpha) {
    if (alpha.size() != wd.weights.size())
        throw std::invalid_argument("alpha length must equal r");
    long a = -2L * (alpha[0] + 2) + wd.dim_zs_minus;
    for (std::size_t i = 1; i < alpha.size(); ++i)
        a -= long(wd.weights[i] + 2) * (alpha[i] + 1);

    long delta = 0;
    for (int ni : wd.weights) delta += ni + 2;
    delta -= wd.dim_zs_minus;
    long b = -delta - 2L * alpha[0];
    for (std::size_t i = 1; i < alpha.size(); ++i) b -= long(wd.weights[i] + 2) * alpha[i];

    if (a != b) throw Error("LambdaAlpha", "the two ladder formulas disagree (n_1 != 2?)");
    return a;
}

}  // namespace sympair
