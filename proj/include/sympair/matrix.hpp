#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "sympair/rational.hpp"

namespace sympair {

/// Dense matrix over the exact rationals. Row-major storage.
class MatQ {
public:
    MatQ() : rows_(0), cols_(0) {}
    MatQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static MatQ identity(std::size_t n) {
        MatQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static MatQ from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
        MatQ m(rows.size(), rows.begin()->size());
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_) throw std::invalid_argument("ragged rows");
            std::size_t j = 0;
            for (const auto& v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const MatQ& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatQ& o) const { return !(*this == o); }

    MatQ operator+(const MatQ& o) const {
        check_same_shape(o);
        MatQ r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    MatQ operator-(const MatQ& o) const {
        check_same_shape(o);
        MatQ r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
        return r;
    }

    MatQ operator-() const {
        MatQ r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }

    MatQ operator*(const MatQ& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
        MatQ r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    MatQ operator*(const Rational& c) const {
        MatQ r = *this;
        for (auto& v : r.a_) v *= c;
        return r;
    }

    friend MatQ operator*(const Rational& c, const MatQ& m) { return m * c; }

    MatQ transpose() const {
        MatQ r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Flattened entries, row-major. Used as coordinates in the ambient space.
    const std::vector<Rational>& flat() const { return a_; }
    std::vector<Rational>& flat() { return a_; }

    friend std::ostream& operator<<(std::ostream& os, const MatQ& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << to_string(m(i, j)) << (j + 1 < m.cols_ ? " " : "");
            os << (i + 1 < m.rows_ ? "\n" : "]");
        }
        return os;
    }

private:
    void check_same_shape(const MatQ& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("dimension mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

inline MatQ bracket(const MatQ& x, const MatQ& y) {
    if (x.rows() != x.cols() || x.rows() != y.rows() || y.rows() != y.cols())
        throw std::invalid_argument("bracket needs square matrices of equal size");
    return x * y - y * x;
}

inline MatQ mat_pow(const MatQ& x, unsigned e) {
    MatQ r = MatQ::identity(x.rows()), b = x;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

}  // namespace sympair
