#pragma once

#include <vector>

#include "sympair/errors.hpp"
#include "sympair/linalg.hpp"
#include "sympair/matrix.hpp"

namespace sympair {

class SymmetricPair;

/// A linear subspace of gl(n), carried by an explicit independent basis of
/// matrices. Coordinates live in the flattened n*n ambient space.
struct Subspace {
    std::size_t n = 0;
    std::vector<MatQ> basis;

    std::size_t dim() const { return basis.size(); }

    std::vector<VecQ> coords() const {
        std::vector<VecQ> v;
        v.reserve(basis.size());
        for (const auto& b : basis) v.push_back(b.flat());
        return v;
    }

    bool contains(const MatQ& x) const {
        if (basis.empty()) return x.is_zero();
        return coordinates_in(coords(), x.flat(), n * n).has_value();
    }

    MatQ from_coeffs(const VecQ& c) const {
        MatQ x(n, n);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (c[k] != 0) x = x + basis[k] * c[k];
        return x;
    }

    static Subspace from_vectors(std::size_t n, const std::vector<VecQ>& vecs) {
        Subspace s;
        s.n = n;
        for (const VecQ& v : independent_subset(vecs, n * n)) {
            MatQ m(n, n);
            m.flat() = v;
            s.basis.push_back(std::move(m));
        }
        return s;
    }
};

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    Subspace s;
    s.n = a.n;
    for (const VecQ& v : intersect_spans(a.coords(), b.coords(), a.n * a.n)) {
        MatQ m(a.n, a.n);
        m.flat() = v;
        s.basis.push_back(std::move(m));
    }
    return s;
}

/// Kernel of v -> [x, v] restricted to the subspace s; exact nullspace basis.
inline Subspace centralizer(const Subspace& s, const MatQ& x) {
    if (s.basis.empty()) return s;
    std::size_t nn = s.n * s.n;
    MatQ m(nn, s.basis.size());
    for (std::size_t j = 0; j < s.basis.size(); ++j) {
        MatQ br = bracket(x, s.basis[j]);
        for (std::size_t i = 0; i < nn; ++i) m(i, j) = br.flat()[i];
    }
    Subspace out;
    out.n = s.n;
    for (const VecQ& k : nullspace(m)) out.basis.push_back(s.from_coeffs(k));
    return out;
}

/// Image [x, s] as a subspace.
inline Subspace ad_image(const MatQ& x, const Subspace& s) {
    std::vector<VecQ> vecs;
    for (const auto& b : s.basis) vecs.push_back(bracket(x, b).flat());
    return Subspace::from_vectors(s.n, vecs);
}

/// gl(n, Q) with the block-signature involution sigma(X) = J X J,
/// J = diag(I_p, -I_q). h = fixed subalgebra (block diagonal), q = the
/// (-1)-eigenspace (block antidiagonal).
class SymmetricPair {
public:
    std::size_t n = 0, p = 0, q = 0;
    Subspace h_space, q_space, q_s_space, c_q_space;
    std::size_t rank = 0;

    MatQ sigma(const MatQ& x) const {
        MatQ y = x;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (block_of(i) != block_of(j)) y(i, j) = -y(i, j);
        return y;
    }

    std::pair<MatQ, MatQ> sigma_split(const MatQ& x) const {
        MatQ s = sigma(x);
        Rational half(1, 2);
        return {(x + s) * half, (x - s) * half};
    }

    bool in_h(const MatQ& x) const { return sigma(x) == x; }
    bool in_q(const MatQ& x) const { return sigma(x) == -x; }

    int block_of(std::size_t i) const { return i < p ? 0 : 1; }

private:
};

/// B(X, Y) = tr(XY)/2, the invariant form used throughout; on the derived
/// algebra it is a positive multiple of the Killing form.
inline Rational trace_form(const MatQ& x, const MatQ& y) {
    if (x.rows() != y.rows()) throw std::invalid_argument("dimension mismatch");
    Rational t = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) t += x(i, k) * y(k, i);
    return t / 2;
}

inline Rational omega(const MatQ& x) { return trace_form(x, x); }

/// theta-inner product <X, Y> = tr(X^T Y)/2 = -B(theta X, Y) for theta = -transpose.
inline Rational theta_inner(const MatQ& x, const MatQ& y) {
    return trace_form(x.transpose(), y);
}

namespace detail {

inline MatQ unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
    MatQ m(n, n);
    m(i, j) = 1;
    return m;
}

}  // namespace detail

namespace detail {

inline Subspace center_of(const Subspace& z) {
    // joint kernel of ad(z_j) restricted to z, stacked
    std::size_t nn = z.n * z.n, d = z.dim();
    MatQ m(nn * d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t g = 0; g < d; ++g) {
            MatQ br = bracket(z.basis[j], z.basis[g]);
            for (std::size_t i = 0; i < nn; ++i) m(g * nn + i, j) = br.flat()[i];
        }
    Subspace out;
    out.n = z.n;
    for (const VecQ& k : nullspace(m)) out.basis.push_back(z.from_coeffs(k));
    return out;
}

inline Subspace derived_of(const Subspace& z) {
    std::vector<VecQ> vecs;
    for (std::size_t i = 0; i < z.dim(); ++i)
        for (std::size_t j = i + 1; j < z.dim(); ++j)
            vecs.push_back(bracket(z.basis[i], z.basis[j]).flat());
    return Subspace::from_vectors(z.n, vecs);
}

inline Subspace sigma_part(const SymmetricPair& pair, const Subspace& s, int sign) {
    std::vector<VecQ> vecs;
    for (const auto& b : s.basis) {
        auto [hp, qp] = pair.sigma_split(b);
        vecs.push_back(sign > 0 ? hp.flat() : qp.flat());
    }
    return Subspace::from_vectors(s.n, vecs);
}

}  // namespace detail

/// Structure data of the centralizer z = g_{A0} of a semisimple A0 in q:
/// center, derived algebra and their sigma-parts. For A0 = 0 this recovers
/// the ambient pair with z_s = sl(n).
struct CentralizerData {
    const SymmetricPair* pair = nullptr;
    MatQ a0;
    Subspace z, c, z_s;
    Subspace z_minus, z_plus;      // z ∩ q, z ∩ h
    Subspace c_minus, c_plus;      // c ∩ q, c ∩ h
    Subspace zs_minus, zs_plus;    // z_s ∩ q, z_s ∩ h
};

}  // namespace sympair
