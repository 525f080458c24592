#pragma once

#include <vector>

#include "sympair/linalg.hpp"
#include "sympair/matrix.hpp"

namespace sympair {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Trailing zeros are trimmed; the zero polynomial is the empty vector.
struct UPoly {
    std::vector<Rational> c;

    static UPoly zero() { return {}; }
    static UPoly constant(const Rational& a) { return a == 0 ? UPoly{} : UPoly{{a}}; }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rational& lead() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    }

    MatQ eval(const MatQ& x) const {
        MatQ v(x.rows(), x.cols());
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            v = v * x;
            for (std::size_t i = 0; i < x.rows(); ++i) v(i, i) += *it;
        }
        return v;
    }
};

inline UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

inline UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

inline UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

inline UPoly operator*(const Rational& s, const UPoly& a) {
    if (s == 0) return {};
    UPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

inline UPoly derivative(const UPoly& a) {
    UPoly r;
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(Rational(long(i)) * a.c[i]);
    return r;
}

/// Quotient and remainder of a by b, b nonzero.
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly q;
    q.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, Rational(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.lead() / b.lead();
        int shift = a.degree() - b.degree();
        q.c[shift] += f;
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
        a.trim();
    }
    q.trim();
    return {q, a};
}

inline UPoly monic(UPoly a) {
    if (a.is_zero()) return a;
    Rational inv = 1 / a.lead();
    for (auto& v : a.c) v *= inv;
    return a;
}

inline UPoly poly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return monic(a);
}

/// Bezout coefficients: returns (s, t) with s*a + t*b = gcd(a, b) (monic).
inline std::pair<UPoly, UPoly> poly_bezout(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(1), s1 = UPoly::zero();
    UPoly t0 = UPoly::zero(), t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1; r1 = r;
        UPoly s = s0 - q * s1; s0 = s1; s1 = s;
        UPoly t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (!r0.is_zero()) {
        Rational inv = 1 / r0.lead();
        s0 = inv * s0;
        t0 = inv * t0;
    }
    return {s0, t0};
}

/// Characteristic polynomial det(tI - M) via Faddeev-LeVerrier, exact.
inline UPoly char_poly(const MatQ& m) {
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    MatQ mk(n, n);  // zero
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        mk = m * mk;
        c[n - k] = -mk.trace() / Rational(long(k));
    }
    UPoly p;
    p.c = std::move(c);
    p.trim();
    return p;
}

/// Radical of p: p / gcd(p, p'). Same roots, all simple.
inline UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 1) return monic(p);
    UPoly g = poly_gcd(p, derivative(p));
    return monic(divmod(p, g).first);
}

}  // namespace sympair
