#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt big_pow(BigInt base, long long e) {
    BigInt r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// binomial with rational upper argument: x(x-1)...(x-m+1)/m!
inline BigRat rational_binomial(const BigRat& x, long long m) {
    BigRat r = 1;
    for (long long i = 0; i < m; ++i) r *= (x - i);
    for (long long i = 2; i <= m; ++i) r /= i;
    return r;
}

inline std::string rat_str(const BigRat& r) {
    return r.str();
}

} // namespace ramsey
