#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "genfun/rational.hpp"

namespace genfun {

// Truncated power series sum a_n z^n, n = 0..order, with exact rational
// coefficients.  The truncation order is data: combining two series yields
// the smaller of the two orders, and no operation invents coefficients it
// cannot know.  All operations are pure; a Series never mutates in place.
class Series {
public:
    // Zero series of the given order.
    explicit Series(int order);

    // Coefficients a_0..a_N define a series of order N = coeffs.size()-1.
    explicit Series(std::vector<Rational> coeffs);
    Series(std::initializer_list<Rational> coeffs);

    static Series constant(const Rational& c, int order);
    static Series identity(int order);                              // z
    static Series monomial(const Rational& c, int k, int order);    // c z^k

    int order() const { return static_cast<int>(c_.size()) - 1; }

    // a_n; throws IndexBeyondOrder outside 0..order.
    const Rational& coefficient(int n) const;

    const std::vector<Rational>& coefficients() const { return c_; }

    // Copy truncated to new_order; throws IndexBeyondOrder if new_order
    // exceeds the known order (truncation never extends).
    Series truncate(int new_order) const;

    bool is_zero() const;

    // Equal order and equal coefficients.
    friend bool operator==(const Series& a, const Series& b) {
        return a.c_ == b.c_;
    }

    // Human-readable form for diagnostics: "1 + 1/2 z - 3 z^2 + O(z^3)".
    std::string str() const;

private:
    std::vector<Rational> c_;
};

// Arithmetic; result order = min of operand orders.
Series operator+(const Series& f, const Series& g);
Series operator-(const Series& f, const Series& g);
Series operator-(const Series& f);
Series operator*(const Series& f, const Series& g);
Series operator*(const Rational& c, const Series& f);

// Cauchy division; throws DivisionByNonUnit when g(0) = 0.
Series operator/(const Series& f, const Series& g);

// f(g(z)); requires g(0) = 0 (NonzeroConstantTerm otherwise).
Series compose(const Series& f, const Series& g);

// Compositional inverse: g with f(g(z)) = z through the common order.
// Requires f(0) = 0 and f'(0) != 0 (NonzeroConstantTerm / NotInvertible).
Series revert(const Series& f);

// d/dz; order drops by one (an order-0 input yields the order-0 zero series).
Series derive(const Series& f);

// Antiderivative with zero constant term; order rises by one.
Series integrate(const Series& f);

// exp(f) for f(0) = 0; log(f) and pow(f, r) for f(0) = 1 (BadConstantTerm
// otherwise).  The exponent is rational so coefficients stay exact.
Series exp(const Series& f);
Series log(const Series& f);
Series pow(const Series& f, const Rational& r);

// Partial sum sum_{n<=N} a_n z^n in double arithmetic; N <= order.
double eval_partial(const Series& f, double z, int N);

// Same partial sum evaluated exactly.
Rational eval_exact(const Series& f, const Rational& z, int N);

} // namespace genfun
