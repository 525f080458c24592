#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sympair/rational.hpp"

namespace sympair {

/// Sparse monomial: sorted (variable, exponent) pairs, exponents positive.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return r;
}

inline unsigned mono_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

/// Names for polynomial variables; indices are allocated append-only so that
/// polynomials over the same pool compose freely.
class VarPool {
public:
    std::uint32_t add(const std::string& name) {
        names_.push_back(name);
        return static_cast<std::uint32_t>(names_.size() - 1);
    }
    const std::string& name(std::uint32_t i) const { return names_[i]; }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
};

/// Multivariate polynomial over Q with canonical ordered sparse storage.
class Poly {
public:
    Poly() = default;
    /*implicit*/ Poly(const Rational& c) {
        if (c != 0) t_[Monomial{}] = c;
    }
    /*implicit*/ Poly(long c) : Poly(Rational(c)) {}

    static Poly var(std::uint32_t v, unsigned e = 1) {
        Poly p;
        if (e > 0)
            p.t_[Monomial{{v, e}}] = 1;
        else
            p.t_[Monomial{}] = 1;
        return p;
    }

    bool is_zero() const { return t_.empty(); }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
    }

    Rational constant_term() const {
        auto it = t_.find(Monomial{});
        return it == t_.end() ? Rational(0) : it->second;
    }

    unsigned degree() const {
        unsigned d = 0;
        for (auto& [m, c] : t_) d = std::max(d, mono_degree(m));
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [m1, c1] : t_)
            for (auto& [m2, c2] : o.t_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }
    Poly operator*(const Rational& s) const {
        if (s == 0) return {};
        Poly r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return t_ != o.t_; }

    Poly derivative(std::uint32_t v) const {
        Poly r;
        for (auto& [m, c] : t_)
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k].first != v) continue;
                Monomial mm = m;
                Rational cc = c * Rational(long(m[k].second));
                if (--mm[k].second == 0) mm.erase(mm.begin() + k);
                r.add_term(mm, cc);
            }
        return r;
    }

    Rational eval(const std::vector<Rational>& x) const {
        Rational v = 0;
        for (auto& [m, c] : t_) {
            Rational term = c;
            for (auto& [var, e] : m) term *= rational_pow(x.at(var), e);
            v += term;
        }
        return v;
    }

    double eval_double(const std::vector<double>& x) const {
        double v = 0;
        for (auto& [m, c] : t_) {
            double term = to_double(c);
            for (auto& [var, e] : m)
                for (unsigned k = 0; k < e; ++k) term *= x.at(var);
            v += term;
        }
        return v;
    }

    /// Substitutes rational values for a subset of variables.
    Poly substitute(const std::map<std::uint32_t, Rational>& vals) const {
        Poly r;
        for (auto& [m, c] : t_) {
            Rational coef = c;
            Monomial rest;
            for (auto& [var, e] : m) {
                auto it = vals.find(var);
                if (it == vals.end())
                    rest.emplace_back(var, e);
                else
                    coef *= rational_pow(it->second, e);
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Rational>& terms() const { return t_; }

    std::string str(const VarPool& pool) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : t_) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = abs(c);
            if (a != 1 || m.empty()) os << to_string(a);
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (a != 1 || k > 0 || m.empty()) os << "*";
                os << pool.name(m[k].first);
                if (m[k].second > 1) os << "^" << m[k].second;
            }
        }
        return os.str();
    }

private:
    std::map<Monomial, Rational> t_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

/// Determinant of a square polynomial matrix by dynamic programming over
/// column subsets (Laplace expansion with shared minors).
inline Poly poly_determinant(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Poly(Rational(1));
    if (n > 20) throw std::invalid_argument("poly_determinant: dimension too large");
    std::vector<Poly> cur(1, Poly(Rational(1)));  // minors of 0 rows
    std::vector<std::uint32_t> popcount(1u << n, 0);
    for (std::uint32_t s = 1; s < (1u << n); ++s) popcount[s] = popcount[s >> 1] + (s & 1);

    // cur indexed by column subsets of size = processed rows
    std::vector<Poly> table(1u << n);
    table[0] = Poly(Rational(1));
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<Poly> next(1u << n);
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            if (popcount[s] != row || table[s].is_zero()) continue;
            int sign_toggle = 0;
            for (std::size_t col = 0; col < n; ++col) {
                if (s & (1u << col)) {
                    ++sign_toggle;
                    continue;
                }
                if (m[row][col].is_zero()) continue;
                // expansion along row `row`: sign (-1)^{row + #(used cols < col)}
                Poly contrib = table[s] * m[row][col];
                if ((row + sign_toggle) % 2) contrib = -contrib;
                next[s | (1u << col)] += contrib;
            }
        }
        // reuse storage between rows
        for (std::uint32_t s = 0; s < (1u << n); ++s) table[s] = std::move(next[s]);
    }
    return table[(1u << n) - 1];
}

}  // namespace sympair
