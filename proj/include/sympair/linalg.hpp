#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sympair/matrix.hpp"

namespace sympair {

using VecQ = std::vector<Rational>;

/// In-place reduced row echelon form; returns the pivot columns in order.
inline std::vector<std::size_t> rref(MatQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(MatQ m) { return rref(m).size(); }

/// Basis of the kernel of m (as column vectors), from the RREF free columns.
/// Deterministic: free variables are set to 1 one at a time in column order.
inline std::vector<VecQ> nullspace(MatQ m) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        VecQ v(m.cols(), Rational(0));
        v[fc] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Particular solution of m x = b with free variables set to zero, if solvable.
inline std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
    MatQ aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    VecQ x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
    return x;
}

inline Rational determinant(MatQ m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Rational det = 1;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t pr = col;
        while (pr < m.rows() && m(pr, col) == 0) ++pr;
        if (pr == m.rows()) return Rational(0);
        if (pr != col) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Rational inv = 1 / m(col, col);
        for (std::size_t i = col + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

inline std::optional<MatQ> inverse(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    MatQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    if (rref(aug).size() != n) return std::nullopt;
    MatQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Matrix whose columns are the given vectors.
inline MatQ columns_matrix(const std::vector<VecQ>& cols, std::size_t dim) {
    MatQ m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    return m;
}

/// Reduces a spanning set to an independent one (keeps the earliest spanners).
inline std::vector<VecQ> independent_subset(const std::vector<VecQ>& vecs, std::size_t dim) {
    if (vecs.empty()) return {};
    MatQ m = columns_matrix(vecs, dim);
    std::vector<std::size_t> pivots = rref(m);
    std::vector<VecQ> out;
    for (auto c : pivots) out.push_back(vecs[c]);
    return out;
}

/// Basis of span(a) ∩ span(b): kernel vectors of [A | -B] give the coefficients.
inline std::vector<VecQ> intersect_spans(const std::vector<VecQ>& a, const std::vector<VecQ>& b,
                                         std::size_t dim) {
    if (a.empty() || b.empty()) return {};
    MatQ m(dim, a.size() + b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = a[j][i];
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m(i, a.size() + j) = -b[j][i];
    std::vector<VecQ> out;
    for (const VecQ& k : nullspace(m)) {
        VecQ v(dim, Rational(0));
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
        out.push_back(std::move(v));
    }
    return independent_subset(out, dim);
}

/// Coordinates of v in the span of basis, if it lies there.
inline std::optional<VecQ> coordinates_in(const std::vector<VecQ>& basis, const VecQ& v,
                                          std::size_t dim) {
    return solve(columns_matrix(basis, dim), v);
}

}  // namespace sympair
