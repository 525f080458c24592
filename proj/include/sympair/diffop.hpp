#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympair/poly.hpp"
#include "sympair/sl2.hpp"

namespace sympair {

/// Multi-index over the transversal coordinates x_1..x_r.
using MultiIndex = std::vector<int>;

inline int mi_total(const MultiIndex& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

inline MultiIndex mi_add(MultiIndex a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline bool mi_leq(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MultiIndex mi_unit(std::size_t r, std::size_t i, int v = 1) {
    MultiIndex a(r, 0);
    a[i] = v;
    return a;
}

inline Rational mi_factorial(const MultiIndex& a) {
    Rational f = 1;
    for (int v : a) f *= Rational(factorial_int(unsigned(v)));
    return f;
}

inline std::string mi_str(const MultiIndex& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::to_string(a[i]) + (i + 1 < a.size() ? "," : "");
    return s + ")";
}

/// Analytic coefficient known only through its vanishing order at 0. Its
/// Taylor monomials become fresh symbolic scalars when applied to a delta
/// expansion.
struct TaylorAtom {
    std::string name;
    int vanishing_order = 0;
};

/// One term coef * x^xpow * a(X) * d^dx (optionally followed by a transverse
/// operator acting on the second factor). Coefficients are polynomials so
/// that generic symbolic constants are representable.
struct OpTerm {
    Poly coef = Poly(Rational(1));
    MultiIndex xpow, dx;
    std::optional<TaylorAtom> atom;
    std::optional<std::string> transverse_tag;

    int total_degree() const {
        return mi_total(dx) - mi_total(xpow) - (atom ? atom->vanishing_order : 0);
    }
};

using OperatorWord = std::vector<OpTerm>;

inline int total_degree(const OperatorWord& w) {
    int d = std::numeric_limits<int>::min();
    for (const auto& t : w) d = std::max(d, t.total_degree());
    return d;
}

/// Radial operator at a distinguished nilpotent, scaled by c0: the leading
/// word is exactly 2 x1 d1^2 + (dim z_s^-) d1 + sum_{i>=2} (n_i+2) x_i d1 d_i,
/// and the unknown analytic parts enter as Taylor atoms a_{i,j} (vanishing
/// order 1) and a_i (order 0). For non-distinguished data the leading word is
/// a generic symbolic constant-coefficient operator of order 2.
struct NilpotentRadialOp {
    OperatorWord word;       // leading structure plus atom terms, times c0
    OperatorWord leading;    // the explicit part only
    bool distinguished = true;
    WeightData data;

    int leading_total_degree() const { return total_degree(leading); }
};

inline NilpotentRadialOp nilpotent_radial_operator(const WeightData& wd) {
    std::size_t r = wd.weights.size();
    NilpotentRadialOp op;
    op.data = wd;
    op.distinguished =
        std::all_of(wd.weights.begin(), wd.weights.end(), [](int n) { return n > 0; });

    if (op.distinguished) {
        OpTerm t1;  // 2 x1 d1^2
        t1.coef = Poly(Rational(2));
        t1.xpow = mi_unit(r, 0);
        t1.dx = mi_unit(r, 0, 2);
        OpTerm t2;  // dim * d1
        t2.coef = Poly(Rational(long(wd.dim_zs_minus)));
        t2.xpow = MultiIndex(r, 0);
        t2.dx = mi_unit(r, 0);
        op.leading = {t1, t2};
        for (std::size_t i = 1; i < r; ++i) {
            OpTerm ti;  // (n_i + 2) x_i d1 d_i
            ti.coef = Poly(Rational(long(wd.weights[i] + 2)));
            ti.xpow = mi_unit(r, i);
            ti.dx = mi_add(mi_unit(r, 0), mi_unit(r, i));
            op.leading.push_back(ti);
        }
        op.word = op.leading;
        for (std::size_t i = 1; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                OpTerm a;  // a_{i,j}(X) d_i d_j, a_{i,j}(0) = 0
                a.xpow = MultiIndex(r, 0);
                a.dx = mi_add(mi_unit(r, i), mi_unit(r, j));
                a.atom = TaylorAtom{"a" + std::to_string(i + 1) + std::to_string(j + 1), 1};
                op.word.push_back(a);
            }
        for (std::size_t i = 1; i < r; ++i) {
            OpTerm a;  // a_i(X) d_i
            a.xpow = MultiIndex(r, 0);
            a.dx = mi_unit(r, i);
            a.atom = TaylorAtom{"a" + std::to_string(i + 1), 0};
            op.word.push_back(a);
        }
    }
    return op;
}

/// Generic symbolic homogeneous constant-coefficient order-2 operator; the
/// coefficient symbols are drawn from the pool.
inline NilpotentRadialOp generic_order2_operator(std::size_t r, const WeightData& wd,
                                                 VarPool& pool) {
    NilpotentRadialOp op;
    op.data = wd;
    op.distinguished = false;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            OpTerm t;
            t.coef = Poly::var(pool.add("c" + std::to_string(i + 1) + std::to_string(j + 1)));
            t.xpow = MultiIndex(r, 0);
            t.dx = mi_add(mi_unit(r, i), mi_unit(r, j));
            op.leading.push_back(t);
        }
    op.word = op.leading;
    return op;
}

}  // namespace sympair
