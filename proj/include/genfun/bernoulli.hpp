#pragma once

#include "genfun/rational.hpp"
#include "genfun/series.hpp"

namespace genfun {

// Exact Bernoulli numbers B_0..B_max, built once by long division of the
// defining series: z/(e^z - 1) = sum B_n z^n / n!.  Convention B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(int max_index);

    int max_index() const { return static_cast<int>(b_.size()) - 1; }

    // B_n
    const Rational& number(int n) const;

    // B_n / n!, the raw generating-function coefficient.
    Rational gf_coefficient(int n) const;

    std::vector<Rational> numbers() const { return b_; }

private:
    std::vector<Rational> b_;
};

// Cached single-number lookups; tables grow on demand behind a lock.
Rational bernoulli_number(int n);

// Euler numbers E_n (E_0 = 1, E_2 = -1, ...), from 2 e^{z/2}/(e^z + 1)
// = sum E_n(1/2) z^n / n! and E_n = 2^n E_n(1/2).
Rational euler_number(int n);

// [z^n] 2/(e^z + 1) = E_n(0)/n!.
Rational euler_gf0_coefficient(int n);

// Bernoulli polynomial B_n(a) = sum_k C(n,k) B_k a^{n-k}.
Rational bernoulli_polynomial(int n, const Rational& a);

// Euler polynomial E_n(a) = sum_k C(n,k) (E_k/2^k) (a - 1/2)^{n-k}.
Rational euler_polynomial(int n, const Rational& a);

} // namespace genfun
