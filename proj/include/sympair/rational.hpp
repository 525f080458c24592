#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace sympair {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in canonical reduced form with a
/// positive denominator (the backend maintains this).
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, unsigned e) {
    Rational r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline Int factorial_int(unsigned n) {
    Int f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::optional<Int> isqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact square root when the rational is a perfect square of a rational.
inline std::optional<Rational> sqrt_exact(const Rational& r) {
    auto n = isqrt_exact(numerator(r));
    auto d = isqrt_exact(denominator(r));
    if (n && d) return Rational(*n, *d);
    return std::nullopt;
}

/// Small random rationals for witness searches and property tests.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, long max_num = 6, long max_den = 4)
        : rng_(seed), num_(-max_num, max_num), den_(1, max_den) {}

    Rational operator()() { return Rational(num_(rng_), den_(rng_)); }

    Rational nonzero() {
        for (;;) {
            Rational r = (*this)();
            if (r != 0) return r;
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<long> num_;
    std::uniform_int_distribution<long> den_;
};

}  // namespace sympair
