#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sympair/errors.hpp"
#include "sympair/jordan.hpp"
#include "sympair/pair.hpp"

namespace sympair {

/// Normal sl2-triple (B0, X0, Y0) of the subpair (z_s, z_s^+):
/// [B0,X0] = 2X0, [B0,Y0] = -2Y0, [X0,Y0] = B0 with B0 in z_s^+ and
/// X0, Y0 in z_s^-. transpose_convention marks Y0 = X0^T.
struct Sl2Triple {
    MatQ b0, x0, y0;
    bool transpose_convention = false;
    std::string note;
};

namespace detail {

inline bool triple_brackets_ok(const MatQ& b0, const MatQ& x0, const MatQ& y0) {
    return bracket(b0, x0) == x0 * Rational(2) && bracket(b0, y0) == y0 * Rational(-2) &&
           bracket(x0, y0) == b0;
}

/// Maps a linear expression over the subspace basis through op into flat rows.
inline MatQ basis_map_matrix(const Subspace& s, const std::function<MatQ(const MatQ&)>& op) {
    std::size_t nn = s.n * s.n;
    MatQ m(nn, s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        MatQ im = op(s.basis[j]);
        for (std::size_t i = 0; i < nn; ++i) m(i, j) = im.flat()[i];
    }
    return m;
}

}  // namespace detail

/// Completes a nonzero nilpotent X0 in z_s^- to a normal sl2-triple.
/// Prefers Y0 = X0^T when that satisfies the bracket relations and lies in
/// z_s^-; otherwise solves the linear systems exactly (canonical RREF
/// solution, so the result is deterministic).
inline Sl2Triple complete_normal_triple(const MatQ& x0, const CentralizerData& cd) {
    if (x0.is_zero() || classify(x0) != ElementKind::Nilpotent)
        throw not_nilpotent("X0 must be a nonzero nilpotent element");
    if (!cd.zs_minus.contains(x0))
        throw domain_error("X0 does not lie in z_s^-");

    MatQ xt = x0.transpose();
    if (cd.zs_minus.contains(xt)) {
        MatQ b0 = bracket(x0, xt);
        if (detail::triple_brackets_ok(b0, x0, xt) && cd.zs_plus.contains(b0))
            return {b0, x0, xt, true, ""};
    }

    // Step 1: W in z_s^- with [[X0, W], X0] = 2 X0, then B0 = [X0, W].
    MatQ m1 = detail::basis_map_matrix(
        cd.zs_minus, [&](const MatQ& w) { return bracket(bracket(x0, w), x0); });
    auto wcoef = solve(m1, (x0 * Rational(2)).flat());
    if (!wcoef) throw Error("TripleCompletion", "no B0 solves [[X0,W],X0] = 2X0");
    MatQ b0 = bracket(x0, cd.zs_minus.from_coeffs(*wcoef));

    // Step 2: Y0 in z_s^- with [X0, Y0] = B0 and [B0, Y0] = -2 Y0 (stacked solve).
    std::size_t nn = cd.pair->n * cd.pair->n, d = cd.zs_minus.dim();
    MatQ m2(2 * nn, d);
    for (std::size_t j = 0; j < d; ++j) {
        MatQ r1 = bracket(x0, cd.zs_minus.basis[j]);
        MatQ r2 = bracket(b0, cd.zs_minus.basis[j]) + cd.zs_minus.basis[j] * Rational(2);
        for (std::size_t i = 0; i < nn; ++i) {
            m2(i, j) = r1.flat()[i];
            m2(nn + i, j) = r2.flat()[i];
        }
    }
    VecQ rhs(2 * nn, Rational(0));
    for (std::size_t i = 0; i < nn; ++i) rhs[i] = b0.flat()[i];
    auto ycoef = solve(m2, rhs);
    if (!ycoef) throw Error("TripleCompletion", "no Y0 completes the triple");
    MatQ y0 = cd.zs_minus.from_coeffs(*ycoef);

    if (!detail::triple_brackets_ok(b0, x0, y0) || !cd.zs_plus.contains(b0))
        throw Error("TripleCompletion", "triple failed bracket verification");
    return {b0, x0, y0, false,
            "NoTransposeCompatibleTriple: fell back to general linear solve"};
}

/// Weight data consumed by the radial-operator and singularity modules.
struct WeightData {
    std::vector<int> weights;  // n_1 = 2 first, then descending
    int dim_zs_minus = 0;
    Rational c0_sq = 1;  // squared theta-norm of X0
};

struct WeightDecomposition {
    Sl2Triple triple;
    Subspace u_space;               // U = (z_s^-)_{Y0}
    std::vector<MatQ> basis;        // orthogonal raw vectors; w_i = basis[i]/sqrt(norm_sq[i])
    std::vector<Rational> norm_sq;  // theta-norms squared of the raw vectors
    std::vector<int> weights;       // [B0, w_i] = -n_i w_i
    int dim_zs_minus = 0;
    Rational c0_sq = 0;
    Rational y0_norm_sq = 0;

    int r() const { return static_cast<int>(weights.size()); }

    int delta_q() const {
        int s = 0;
        for (int ni : weights) s += ni + 2;
        return s - dim_zs_minus;
    }

    WeightData data() const { return {weights, dim_zs_minus, c0_sq}; }
};

inline int delta_q(const WeightDecomposition& wd) { return wd.delta_q(); }

namespace detail {

/// Gram-Schmidt under the theta-inner product, exact and unnormalized.
inline void orthogonalize(std::vector<MatQ>& vecs) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            Rational denom = theta_inner(vecs[j], vecs[j]);
            if (denom == 0) continue;
            Rational c = theta_inner(vecs[j], vecs[i]) / denom;
            if (c != 0) vecs[i] = vecs[i] - vecs[j] * c;
        }
}

inline bool direct_sum_spans(const Subspace& whole, const Subspace& a, const Subspace& b) {
    if (a.dim() + b.dim() != whole.dim()) return false;
    std::vector<VecQ> all = a.coords();
    for (const auto& v : b.coords()) all.push_back(v);
    return independent_subset(all, whole.n * whole.n).size() == whole.dim();
}

}  // namespace detail

/// Diagonalizes ad B0 on U = (z_s^-)_{Y0} with non-positive integer
/// eigenvalues -n_i, orthogonalizes within weight spaces, and verifies the
/// two transversality decompositions of z_s^±.
inline WeightDecomposition weight_decomposition(const Sl2Triple& t, const CentralizerData& cd) {
    WeightDecomposition wd;
    wd.triple = t;
    wd.dim_zs_minus = static_cast<int>(cd.zs_minus.dim());
    wd.u_space = centralizer(cd.zs_minus, t.y0);
    std::size_t d = wd.u_space.dim();

    // matrix of ad B0 in the U basis
    MatQ adb(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        MatQ im = bracket(t.b0, wd.u_space.basis[j]);
        auto c = coordinates_in(wd.u_space.coords(), im.flat(), cd.pair->n * cd.pair->n);
        if (!c) throw non_integer_weight("ad B0 does not preserve U; invalid triple");
        for (std::size_t i = 0; i < d; ++i) adb(i, j) = (*c)[i];
    }

    int bound = 2 * (static_cast<int>(cd.pair->n) - 1);
    std::vector<std::pair<int, std::vector<MatQ>>> spaces;  // (n_i, eigenvectors)
    std::size_t total = 0;
    for (int m = 0; m <= bound; ++m) {
        MatQ shifted = adb;
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) += m;
        std::vector<MatQ> vecs;
        for (const VecQ& k : nullspace(shifted)) vecs.push_back(wd.u_space.from_coeffs(k));
        if (!vecs.empty()) {
            total += vecs.size();
            spaces.emplace_back(m, std::move(vecs));
        }
    }
    if (total != d)
        throw non_integer_weight("ad B0 is not diagonalizable over the integers on U");

    // w_1 = Y0 (n_1 = 2) comes first; the rest is ordered by descending weight.
    // Within each weight space the basis is Gram-Schmidt orthogonalized, so in
    // particular the remaining n = 2 vectors are projected off the Y0 line.
    bool found_y0_space = false;
    for (auto& [m, vecs] : spaces) {
        if (m != 2) continue;
        found_y0_space = true;
        std::vector<VecQ> flats{t.y0.flat()};
        for (const auto& v : vecs) flats.push_back(v.flat());
        vecs.clear();
        for (const VecQ& f : independent_subset(flats, cd.pair->n * cd.pair->n)) {
            MatQ mmat(cd.pair->n, cd.pair->n);
            mmat.flat() = f;
            vecs.push_back(std::move(mmat));
        }
    }
    if (!found_y0_space) throw non_integer_weight("n_1 != 2; invalid triple");

    std::sort(spaces.begin(), spaces.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<MatQ> ordered{t.y0};
    std::vector<int> ws{2};
    for (auto& [m, vecs] : spaces) {
        detail::orthogonalize(vecs);
        for (std::size_t i = (m == 2 ? 1 : 0); i < vecs.size(); ++i) {
            ordered.push_back(vecs[i]);
            ws.push_back(m);
        }
    }

    wd.basis = std::move(ordered);
    wd.weights = std::move(ws);
    for (const auto& v : wd.basis) wd.norm_sq.push_back(theta_inner(v, v));

    wd.y0_norm_sq = trace_form(t.x0, t.y0);  // = theta-norm of Y0 via theta_0
    wd.c0_sq = wd.y0_norm_sq;
    if (wd.c0_sq <= 0) throw Error("TripleCompletion", "B(X0, Y0) must be positive");

    // z_s^- = U ⊕ [z_s^+, X0] and z_s^+ = (z_s^+)_{X0} ⊕ [z_s^-, Y0]
    if (!detail::direct_sum_spans(cd.zs_minus, wd.u_space, ad_image(t.x0, cd.zs_plus)))
        throw Error("Transversality", "z_s^- != U + [z_s^+, X0]");
    if (!detail::direct_sum_spans(cd.zs_plus, centralizer(cd.zs_plus, t.x0),
                                  ad_image(t.y0, cd.zs_minus)))
        throw Error("Transversality", "z_s^+ != (z_s^+)_{X0} + [z_s^-, Y0]");
    return wd;
}

/// Criteria of the distinguished-nilpotent equivalence. (1) is semi-decidable
/// by witness search; (2)-(5) are exact and must agree.
struct DistinguishedReport {
    bool no_semisimple_witness = false;  // criterion (1), search-based
    bool omega_zero_on_cx0 = false;      // (2)
    bool omega_zero_on_cy0 = false;      // (3)
    bool weights_positive = false;       // (4)
    bool zero_intersection = false;      // (5)
    bool verdict = false;
    bool omega_affine_identity = false;  // omega(X0+X) = 2B(X0,X) on U, when distinguished
    std::optional<MatQ> witness;
    WeightDecomposition wd;
};

namespace detail {

inline bool gram_zero(const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = i; j < s.dim(); ++j)
            if (trace_form(s.basis[i], s.basis[j]) != 0) return false;
    return true;
}

}  // namespace detail

inline DistinguishedReport distinguished_report(const MatQ& x0, const CentralizerData& cd,
                                                std::uint64_t seed = 7,
                                                std::size_t samples_per_dim = 64) {
    DistinguishedReport rep;
    Sl2Triple t = complete_normal_triple(x0, cd);
    rep.wd = weight_decomposition(t, cd);

    Subspace cx0 = centralizer(cd.zs_minus, x0);
    rep.omega_zero_on_cx0 = detail::gram_zero(cx0);
    rep.omega_zero_on_cy0 = detail::gram_zero(rep.wd.u_space);
    rep.weights_positive =
        std::all_of(rep.wd.weights.begin(), rep.wd.weights.end(), [](int n) { return n > 0; });
    rep.zero_intersection = intersect(cx0, rep.wd.u_space).dim() == 0;

    if (rep.omega_zero_on_cx0 != rep.omega_zero_on_cy0 ||
        rep.omega_zero_on_cx0 != rep.weights_positive ||
        rep.omega_zero_on_cx0 != rep.zero_intersection)
        throw Error("EquivalenceViolation", "criteria (2)-(5) disagree");
    rep.verdict = rep.omega_zero_on_cx0;

    // (1): a found nonzero semisimple element of (z_s^-)_{X0} falsifies; absence
    // is only consistency, the verdict authority is (2)-(5).
    rep.no_semisimple_witness = true;
    auto try_witness = [&](const MatQ& v) {
        if (!v.is_zero() && classify(v) == ElementKind::Semisimple) {
            rep.no_semisimple_witness = false;
            if (!rep.witness) rep.witness = v;
        }
    };
    for (const auto& b : cx0.basis) try_witness(b);
    RationalSampler sampler(seed);
    for (std::size_t k = 0; k < samples_per_dim * cx0.dim() && rep.no_semisimple_witness; ++k) {
        MatQ v(cd.pair->n, cd.pair->n);
        for (const auto& b : cx0.basis) v = v + b * sampler();
        try_witness(v);
    }

    if (rep.verdict) {
        // omega(X0 + X) = 2 B(X0, X) = 2||Y0|| x_1 on U: equivalent to
        // B(X0, w_i) = 0 for i >= 2 and B(X0, Y0) = ||Y0||^2, checked exactly.
        rep.omega_affine_identity = trace_form(x0, t.y0) == rep.wd.y0_norm_sq;
        for (std::size_t i = 1; i < rep.wd.basis.size(); ++i)
            if (trace_form(x0, rep.wd.basis[i]) != 0) rep.omega_affine_identity = false;
    }
    return rep;
}

}  // namespace sympair
