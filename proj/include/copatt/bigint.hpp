#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace copatt {

/// Arbitrary-precision signed integer. All aggregate counts and series
/// coefficients use this type; no floating point anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;

/// binom(a, b), defined as 0 whenever a < 0, b < 0 or b > a.
inline BigInt binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: r is binom(a-b+i, i) after each step
    }
    return r;
}

inline BigInt pow2(long long e) {
    return e < 0 ? BigInt(0) : BigInt(1) << static_cast<unsigned>(e);
}

}  // namespace copatt
