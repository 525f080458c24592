#pragma once

#include <array>
#include <complex>
#include <optional>

#include "sympair/errors.hpp"
#include "sympair/jordan.hpp"
#include "sympair/linalg.hpp"

namespace sympair::gl4 {

inline MatQ mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    MatQ m(2, 2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
    return m;
}

/// Element of q for the gl(4)/gl(2)xgl(2) pair, stored by its 2x2 blocks:
/// the 4x4 embedding is (0 Y; Z 0).
struct QElement {
    MatQ Y = MatQ(2, 2);
    MatQ Z = MatQ(2, 2);

    MatQ embed() const {
        MatQ m(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                m(i, 2 + j) = Y(i, j);
                m(2 + i, j) = Z(i, j);
            }
        return m;
    }

    static QElement from_embed(const MatQ& m) {
        QElement x;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                x.Y(i, j) = m(i, 2 + j);
                x.Z(i, j) = m(2 + i, j);
            }
        return x;
    }
};

inline MatQ block_q(const MatQ& y, const MatQ& z) { return QElement{y, z}.embed(); }

/// Y-block only: the "upper" nilpotent direction of the block grading.
inline MatQ upper_block(const MatQ& inner) { return block_q(inner, MatQ(2, 2)); }
/// Z-block only.
inline MatQ lower_block(const MatQ& inner) { return block_q(MatQ(2, 2), inner); }
/// Block-diagonal (inner, -inner), an h-element.
inline MatQ split_diag(const MatQ& inner) {
    MatQ m(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = inner(i, j);
            m(2 + i, 2 + j) = -inner(i, j);
        }
    return m;
}

enum class CartanLabel { PP, PM, MM, A2 };

inline const char* cartan_name(CartanLabel l) {
    switch (l) {
        case CartanLabel::PP: return "++";
        case CartanLabel::PM: return "+-";
        case CartanLabel::MM: return "--";
        case CartanLabel::A2: return "a2";
    }
    return "?";
}

inline std::optional<CartanLabel> cartan_from_name(const std::string& s) {
    if (s == "++") return CartanLabel::PP;
    if (s == "+-") return CartanLabel::PM;
    if (s == "--") return CartanLabel::MM;
    if (s == "a2") return CartanLabel::A2;
    return std::nullopt;
}

inline std::pair<int, int> cartan_signs(CartanLabel l) {
    switch (l) {
        case CartanLabel::PP: return {1, 1};
        case CartanLabel::PM: return {1, -1};
        case CartanLabel::MM: return {-1, -1};
        default: throw domain_error("a2 has no sign pattern");
    }
}

/// Representative points of the four Cartan classes. Split labels take
/// (u1, u2): Y = diag(u1, u2), Z = diag(e1 u1, e2 u2). The a2 label takes
/// (theta, tau): Y = Z = (tau -theta; theta tau).
inline QElement cartan_point(CartanLabel l, const Rational& a, const Rational& b) {
    QElement x;
    if (l == CartanLabel::A2) {
        x.Y = mat2(b, -a, a, b);
        x.Z = x.Y;
        return x;
    }
    auto [e1, e2] = cartan_signs(l);
    x.Y = mat2(a, 0, 0, b);
    x.Z = mat2(e1 * a, 0, 0, e2 * b);
    return x;
}

struct InvariantData {
    Rational Q, S, S0;
    std::complex<double> nu1, nu2;
    std::optional<std::pair<Rational, Rational>> nu_exact;  // when S0 is a square
    bool regular = false;
};

/// Q = tr(X^2)/2 = tr(YZ), S = det X = det Y det Z, S0 = Q^2 - 4S and the
/// eigenvalue pair of YZ: nu = (Q ± delta)/2 with delta = i^{Y(-S0)} sqrt|S0|.
inline InvariantData invariants(const QElement& x) {
    InvariantData d;
    d.Q = (x.Y * x.Z).trace();
    d.S = determinant(x.Y) * determinant(x.Z);
    d.S0 = d.Q * d.Q - 4 * d.S;
    d.regular = (d.S != 0) && (d.S0 != 0);
    double qd = to_double(d.Q);
    if (d.S0 >= 0) {
        if (auto rt = sqrt_exact(d.S0)) {
            Rational n1 = (d.Q + *rt) / 2, n2 = (d.Q - *rt) / 2;
            d.nu_exact = std::make_pair(n1, n2);
            d.nu1 = {to_double(n1), 0.0};
            d.nu2 = {to_double(n2), 0.0};
        } else {
            double delta = std::sqrt(to_double(d.S0));
            d.nu1 = {(qd + delta) / 2, 0.0};
            d.nu2 = {(qd - delta) / 2, 0.0};
        }
    } else {
        double delta = std::sqrt(-to_double(d.S0));
        d.nu1 = {qd / 2, delta / 2};
        d.nu2 = {qd / 2, -delta / 2};
    }
    return d;
}

/// Double-precision point of q and its invariants; used on quadrature paths.
struct Q8 {
    std::array<double, 4> y{};  // row-major 2x2
    std::array<double, 4> z{};
};

struct InvariantsD {
    double Q, S, S0;
    std::complex<double> nu1, nu2;
};

inline InvariantsD invariants_d(const Q8& x) {
    InvariantsD d;
    d.Q = x.y[0] * x.z[0] + x.y[1] * x.z[2] + x.y[2] * x.z[1] + x.y[3] * x.z[3];
    double dy = x.y[0] * x.y[3] - x.y[1] * x.y[2];
    double dz = x.z[0] * x.z[3] - x.z[1] * x.z[2];
    d.S = dy * dz;
    d.S0 = d.Q * d.Q - 4 * d.S;
    if (d.S0 >= 0) {
        double delta = std::sqrt(d.S0);
        d.nu1 = {(d.Q + delta) / 2, 0.0};
        d.nu2 = {(d.Q - delta) / 2, 0.0};
    } else {
        double delta = std::sqrt(-d.S0);
        d.nu1 = {d.Q / 2, delta / 2};
        d.nu2 = {d.Q / 2, -delta / 2};
    }
    return d;
}

/// Conjugation by h = (A, B) in GL(2)xGL(2): Y -> A Y B^{-1}, Z -> B Z A^{-1}.
inline QElement conjugate(const QElement& x, const MatQ& a, const MatQ& b) {
    auto ai = inverse(a), bi = inverse(b);
    if (!ai || !bi) throw std::invalid_argument("conjugating matrix is singular");
    return {a * x.Y * *bi, b * x.Z * *ai};
}

}  // namespace sympair::gl4
