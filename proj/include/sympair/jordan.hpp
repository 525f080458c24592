#pragma once

#include "sympair/errors.hpp"
#include "sympair/pair.hpp"
#include "sympair/upoly.hpp"

namespace sympair {

enum class ElementKind { Semisimple, Nilpotent, Mixed };

inline bool is_nilpotent(const MatQ& x) { return mat_pow(x, unsigned(x.rows())).is_zero(); }

inline bool is_semisimple(const MatQ& x) {
    return squarefree_part(char_poly(x)).eval(x).is_zero();
}

/// Nilpotent iff X^n = 0; semisimple iff the minimal polynomial is squarefree,
/// tested as p(X) = 0 for p the radical of the characteristic polynomial.
inline ElementKind classify(const MatQ& x) {
    if (is_nilpotent(x)) return ElementKind::Nilpotent;
    if (is_semisimple(x)) return ElementKind::Semisimple;
    return ElementKind::Mixed;
}

struct JordanParts {
    MatQ semisimple;
    MatQ nilpotent;
};

/// Exact Jordan-Chevalley decomposition X = A0 + X0 over Q.
///
/// Newton iteration on the squarefree part p of the characteristic polynomial:
/// with s p + t p' = 1 from Bezout, X_{k+1} = X_k - p(X_k) t(X_k). The
/// number of iterations needed is at most ceil(log2 n); we iterate until
/// p(X_k) = 0 and verify the three defining properties exactly.
inline JordanParts jordan_chevalley(const MatQ& x) {
    std::size_t n = x.rows();
    UPoly p = squarefree_part(char_poly(x));
    auto [s, t] = poly_bezout(p, derivative(p));
    (void)s;
    MatQ a = x;
    std::size_t guard = 0;
    for (;;) {
        MatQ px = p.eval(a);
        if (px.is_zero()) break;
        if (++guard > n + 2) throw Error("JordanIteration", "Newton iteration did not settle");
        a = a - px * t.eval(a);
    }
    JordanParts jp{a, x - a};
    if (!is_semisimple(jp.semisimple) || !is_nilpotent(jp.nilpotent) ||
        !bracket(jp.semisimple, jp.nilpotent).is_zero())
        throw Error("JordanIteration", "decomposition failed verification");
    return jp;
}

inline CentralizerData build_centralizer_data(const SymmetricPair& pair, const MatQ& a0) {
    if (!a0.is_zero() && !is_semisimple(a0))
        throw not_semisimple("centralizer subpair requires semisimple A0");
    CentralizerData cd;
    cd.pair = &pair;
    cd.a0 = a0;

    Subspace full;
    full.n = pair.n;
    for (std::size_t i = 0; i < pair.n; ++i)
        for (std::size_t j = 0; j < pair.n; ++j)
            full.basis.push_back(detail::unit_matrix(pair.n, i, j));

    cd.z = a0.is_zero() ? full : centralizer(full, a0);
    cd.c = detail::center_of(cd.z);
    cd.z_s = detail::derived_of(cd.z);
    if (cd.c.dim() + cd.z_s.dim() != cd.z.dim())
        throw not_semisimple("centralizer is not reductive");
    cd.z_minus = detail::sigma_part(pair, cd.z, -1);
    cd.z_plus = detail::sigma_part(pair, cd.z, +1);
    cd.c_minus = detail::sigma_part(pair, cd.c, -1);
    cd.c_plus = detail::sigma_part(pair, cd.c, +1);
    cd.zs_minus = detail::sigma_part(pair, cd.z_s, -1);
    cd.zs_plus = detail::sigma_part(pair, cd.z_s, +1);
    return cd;
}

struct PairOptions {
    std::size_t rank_trials = 8;
    std::uint64_t seed = 20240901;
    std::size_t rank_override = 0;  // 0 = compute
};

/// Builds the block-signature pair for gl(p+q) with exact elementary bases.
/// The rank is the minimal centralizer dimension in q over random semisimple
/// sample elements of q, unless overridden.
inline SymmetricPair make_block_pair(std::size_t p, std::size_t q, PairOptions opts = {}) {
    SymmetricPair pr;
    pr.n = p + q;
    pr.p = p;
    pr.q = q;
    std::size_t n = pr.n;

    pr.h_space.n = pr.q_space.n = pr.q_s_space.n = pr.c_q_space.n = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatQ e = detail::unit_matrix(n, i, j);
            if (pr.block_of(i) == pr.block_of(j))
                pr.h_space.basis.push_back(e);
            else
                pr.q_space.basis.push_back(e);
        }

    // q consists of block-antidiagonal matrices, hence traceless: q_s = q.
    std::vector<VecQ> qs;
    for (const auto& b : pr.q_space.basis)
        if (b.trace() == 0) qs.push_back(b.flat());
    pr.q_s_space = Subspace::from_vectors(n, qs);

    // c_g = scalars; its q-part is zero for p, q >= 1.
    Subspace scalars;
    scalars.n = n;
    scalars.basis.push_back(MatQ::identity(n));
    pr.c_q_space = intersect(scalars, pr.q_space);

    if (opts.rank_override) {
        pr.rank = opts.rank_override;
    } else {
        RationalSampler sampler(opts.seed);
        std::size_t best = pr.q_space.dim();
        for (std::size_t trial = 0; trial < opts.rank_trials; ++trial) {
            MatQ x(n, n);
            for (const auto& b : pr.q_space.basis) x = x + b * sampler();
            if (classify(x) != ElementKind::Semisimple) continue;
            best = std::min(best, centralizer(pr.q_space, x).dim());
        }
        pr.rank = best;
    }
    return pr;
}

}  // namespace sympair
