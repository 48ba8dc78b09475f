#pragma once

#include "genfun/rational.hpp"
#include "genfun/series.hpp"

namespace genfun {

// Lagrange expansion of g(T(z)) where T is the compositional inverse of f:
// coefficient n (n >= 1) is (1/n) [x^{n-1}] g'(x) (x/f(x))^n, and the
// constant term is g(0) (A&S 3.6.7).  Both inputs need order >= N.
Series lagrange_coefficients(const Series& f, const Series& g, int N);

// --- rooted-tree sums T_k(x) = sum_{n>=1} n^{n+k} w^n / n!, w = x e^{-x} ---

// Exact coefficient n^{n+k}/n! of w^n (n >= 1; 0 at n = 0).
Rational tree_coefficient(int k, int n);

// w = x e^{-x}, the natural argument of the tree sums.
double tree_argument(double x);

// Principal inverse of w = x e^{-x} on 0 <= x < 1, by bisection; needs
// 0 <= w < 1/e.
double tree_x_from_w(double w);

// Closed form of T_k at the point x (not w), for -3 <= k <= 2: derived by
// applying x d/dx repeatedly to T_{-1} = x, or integrating down from it.
double tree_sum(int k, double x);

// --- Bethe-lattice generating function ---

// B_r(z) = [(1 - sqrt(1-4z))/(2z)]^r = 1 + r sum_{n>=1} C(2n+r,n) z^n/(2n+r).
// Closed form for |z| < 1/4 (series fallback near z = 0 where the surd
// cancels); r may be any real.
double bethe_gf(double r, double z);

// Exact coefficient of z^n in B_r, the three printed routes kept separate
// so they can be compared: via factorials, via a rising factorial, via a
// binomial coefficient.
Rational bethe_coefficient_factorial(int r, int n);
Rational bethe_coefficient_pochhammer(int r, int n);
Rational bethe_coefficient_binomial(int r, int n);

// Exact truncation of B_r (binomial route).
Series bethe_series(int r, int order);

// (1-4z)^{-1/2} B_r(z) = sum C(2n+r,n) z^n: the shifted central-binomial
// column sums.
double central_shifted(int r, double z);
Rational central_shifted_coefficient(int r, int n);

// Exact truncation of the shifted sum.
Series central_shifted_series(int r, int order);

} // namespace genfun
