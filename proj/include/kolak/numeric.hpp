#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kolak {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// ell^e as int64, throwing on overflow.
inline long long ipow(long long ell, int e) {
    if (ell < 1 || e < 0) throw std::invalid_argument("ipow: base >= 1 and exponent >= 0 required");
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (0x7fffffffffffffffLL / ell)) throw std::overflow_error("ipow: overflow");
        r *= ell;
    }
    return r;
}

/// Distinct prime divisors of n, ascending.
inline std::vector<long long> distinct_primes(long long n) {
    if (n < 1) throw std::invalid_argument("distinct_primes: n >= 1 required");
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

/// Largest divisor of g coprime to ell.
inline long long coprime_part(long long g, long long ell) {
    if (g < 1 || ell < 1) throw std::invalid_argument("coprime_part: positive arguments required");
    long long h = g;
    for (;;) {
        long long d = std::gcd(h, ell);
        if (d == 1) return h;
        h /= d;
    }
}

} // namespace kolak
