#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace betti {

// Exact arithmetic used throughout the table layer. Entries like 8/5 have to
// come out exactly, and (r-n)! overflows any machine word long before the
// sizes we care about.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// C(a,b) with the convention C(a,b) = 0 whenever b < 0 or b > a or a < 0.
inline Int binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Int num = 1;
    for (long long i = 0; i < b; ++i) {
        num *= (a - i);
        num /= (i + 1);  // exact: product of i+1 consecutive integers
    }
    return num;
}

inline Int ipow(Int base, unsigned exp) {
    Int out = 1;
    while (exp--) out *= base;
    return out;
}

inline double to_double(const Rat& q) { return q.template convert_to<double>(); }

// "num/den" with the denominator omitted when it is 1, so integers print bare.
inline std::string fraction_string(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

}  // namespace betti
