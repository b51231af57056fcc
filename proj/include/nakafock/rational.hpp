#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nakafock {

// Exact arithmetic everywhere; no floating point in this library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// (-1)^e for any integer exponent.
inline int sign_pow(long long e) { return (e % 2 != 0) ? -1 : 1; }

inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int acc(1);
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;  // exact at every step
    }
    return acc;
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Int& z) { return z.str(); }

}  // namespace nakafock
