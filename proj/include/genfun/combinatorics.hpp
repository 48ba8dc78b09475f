#pragma once

#include <mutex>
#include <vector>

#include "genfun/rational.hpp"

namespace genfun {

// n! as a big integer, cached across calls.
inline BigInt factorial_int(unsigned n) {
    static std::vector<BigInt> cache{BigInt(1)};
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    while (cache.size() <= n)
        cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[n];
}

inline Rational factorial(unsigned n) { return Rational(factorial_int(n)); }

// Rising factorial (z)_n = z(z+1)...(z+n-1), empty product at n = 0.
inline Rational pochhammer(const Rational& z, unsigned n) {
    Rational p(1);
    for (unsigned k = 0; k < n; ++k)
        p *= z + Rational(static_cast<long long>(k));
    return p;
}

// Falling factorial z(z-1)...(z-n+1).
inline Rational falling_factorial(const Rational& z, unsigned n) {
    Rational p(1);
    for (unsigned k = 0; k < n; ++k)
        p *= z - Rational(static_cast<long long>(k));
    return p;
}

// Binomial coefficient C(r, n) for arbitrary rational r: r(r-1)...(r-n+1)/n!.
inline Rational binomial(const Rational& r, unsigned n) {
    return falling_factorial(r, n) / factorial(n);
}

// C(m, n) for integers, 0 when n > m.
inline BigInt binomial_int(unsigned m, unsigned n) {
    if (n > m)
        return BigInt(0);
    BigInt num = factorial_int(m);
    return num / (factorial_int(n) * factorial_int(m - n));
}

// Double factorial n!! = n(n-2)(n-4)...
inline BigInt double_factorial_int(unsigned n) {
    BigInt p(1);
    for (unsigned k = n; k >= 2; k -= 2)
        p *= BigInt(k);
    return p;
}

inline BigInt int_pow(BigInt base, unsigned e) {
    BigInt r(1);
    while (e) {
        if (e & 1u)
            r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// r^e for integer e (negative allowed when r != 0).
inline Rational rational_pow(const Rational& r, long e) {
    if (e >= 0)
        return Rational(int_pow(r.numerator(), static_cast<unsigned>(e)),
                        int_pow(r.denominator(), static_cast<unsigned>(e)));
    if (r.is_zero())
        throw DomainError("0 raised to a negative power");
    return Rational(int_pow(r.denominator(), static_cast<unsigned>(-e)),
                    int_pow(r.numerator(), static_cast<unsigned>(-e)));
}

} // namespace genfun
