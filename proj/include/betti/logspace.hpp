#pragma once

#include <cmath>
#include <limits>

namespace betti {

inline double log_factorial(double n) { return std::lgamma(n + 1.0); }

// log C(a,b); -inf outside the triangle, consistent with binomial() == 0.
// Written so that log_binomial(a, b) == log_binomial(a, a-b) bit for bit
// (the two lgamma terms are combined with one commutative addition).
inline double log_binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return -std::numeric_limits<double>::infinity();
    return log_factorial(static_cast<double>(a)) -
           (log_factorial(static_cast<double>(b)) + log_factorial(static_cast<double>(a - b)));
}

inline constexpr double two_pi = 6.283185307179586476925286766559;

}  // namespace betti
