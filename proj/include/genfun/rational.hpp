#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "genfun/errors.hpp"

namespace genfun {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator.  Arithmetic is delegated to boost's cpp_rational; conversion
// to double is done by hand because the generic boost conversion overflows
// when numerator and denominator separately exceed double range.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(BigInt n) : v_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den) : v_(make(num, den)) {}
    Rational(long long num, long long den)
        : Rational(BigInt(num), BigInt(den)) {}

    // Exact value of the double (every finite double is a dyadic rational).
    static Rational from_double(double x) {
        if (!std::isfinite(x))
            throw DomainError("cannot convert non-finite double to rational");
        Rational r;
        r.v_ = boost::multiprecision::cpp_rational(x);
        return r;
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    double to_double() const;

    // "p" if integral, else "p/q".
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer())
            s += "/" + denominator().str();
        return s;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.v_ == 0)
            throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

private:
    // boost's cpp_rational reduces to lowest terms but rejects a negative
    // denominator, so fix the sign (and the zero check) before handing off.
    static boost::multiprecision::cpp_rational make(BigInt num, BigInt den) {
        if (den == 0)
            throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    boost::multiprecision::cpp_rational v_;
};

inline double Rational::to_double() const {
    BigInt num = numerator();
    BigInt den = denominator();
    if (num == 0)
        return 0.0;
    const bool neg = num < 0;
    if (neg)
        num = -num;
    // Scale so the integer quotient carries ~64 significant bits, convert
    // that, and undo the scaling with ldexp.  Truncation of the quotient
    // costs < 2^-63 relative, below the final rounding step.
    const long nbits = static_cast<long>(boost::multiprecision::msb(num)) + 1;
    const long dbits = static_cast<long>(boost::multiprecision::msb(den)) + 1;
    const long shift = 64 - (nbits - dbits);
    if (shift > 0)
        num <<= shift;
    else if (shift < 0)
        den <<= -shift;
    const BigInt q = num / den;
    const double d = q.convert_to<double>();
    const double result = std::ldexp(d, static_cast<int>(-shift));
    return neg ? -result : result;
}

} // namespace genfun
