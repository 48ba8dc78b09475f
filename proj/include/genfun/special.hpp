#pragma once

#include <vector>

#include "genfun/rational.hpp"

namespace genfun {

// Double-precision special functions.  Every implementation follows a series
// or continued-fraction route that the test suite cross-checks against
// integral representations and frozen references.

// ln Gamma(x) for x > 0 (DomainError otherwise): asymptotic log series after
// shifting the argument up to >= 16 (A&S 6.1.41).
double ln_gamma(double x);

// Gamma(x); reflection handles negative non-integers, nonpositive integers
// throw PoleAtNonpositiveInteger.
double gamma(double x);

// Euler's constant, computed once (Brent-McMillan, N = 12).
double euler_gamma();

// Binomial coefficient and rising factorial for real upper argument.
double binomial_real(double r, unsigned n);
double pochhammer_real(double z, unsigned n);

// Regularized-style incomplete gamma gamma*(a, x) = x^-a P(a, x) / ... in the
// entire normalization: gamma*(a,x) = e^-x sum_n x^n / Gamma(a+n+1)
// (A&S 6.5.29, the absolutely monotone form; needs a > -1).
double incomplete_gamma_star(double a, double x);

// The companion alternating form (1/Gamma(a)) sum_n (-x)^n/((a+n) n!)
// (A&S 6.5.29 again); kept separate so the two routes stay independent.
double incomplete_gamma_star_alt(double a, double x);

// Upper incomplete Gamma(a, x) for x >= 0: continued fraction for
// x >= a + 1, series complement below (A&S 6.5.3, 6.5.31).
double upper_gamma(double a, double x);

// Error function via the alternating series
// erf z = (2/sqrt(pi)) sum_n (-1)^n z^{2n+1} / ((2n+1) n!)
// (A&S 7.1.5; fine for the moderate arguments used here).
double erf(double x);

// Exponential integrals (A&S ch. 5): Ei for x > 0, E1 for x > 0, and
// E_n(x) by upward recurrence from E_1.
double expint_ei(double x);
double expint_e1(double x);
double expint_en(int n, double x);

// Sine/cosine integrals Si, Ci and their hyperbolic partners Shi, Chi
// (A&S ch. 5); Ci and Chi need x > 0.
double sin_integral(double x);
double cos_integral(double x);
double sinh_integral(double x);
double cosh_integral(double x);

// Bessel J_nu and modified I_nu by the ascending series (A&S 9.1.10, 9.6.10);
// nu > -1.  Negative z is allowed only for integer nu (parity rule).
double bessel_j(double nu, double z);
double bessel_i(double nu, double z);

// Complete elliptic integrals K(m), E(m) in the parameter m = k^2,
// 0 <= m < 1, summed from [C(2n,n)/4^n]^2 m^n (A&S 17.3.11, 17.3.12).
double elliptic_k(double m);
double elliptic_e(double m);

// Riemann zeta on the real line, s != 1 (PoleAtOne): Euler-Maclaurin for
// s >= 1/2, exact Bernoulli values at nonpositive integers, reflection
// otherwise.
double zeta(double s);

// Polylogarithm-style sum g_s(z) = sum_{n>=1} z^n / n^s for z in (-1, 1];
// z = 1 needs s > 1.  Direct summation for z <= 1/2; for z > 1/2 the
// expansion in alpha = -ln z with zeta coefficients takes over.
double polylog(double s, double z);

// The two branch routes individually, so they can be compared on the
// overlap: the direct sum needs |z| < 1, the log-expansion needs
// exp(-2 pi) < z < 1.  polylog() dispatches between these at z = 1/2.
double polylog_sum_path(double s, double z);
double polylog_expansion_path(double s, double z);

// Central binomial C(2n,n)/4^n: exact value and the asymptotic form
// (pi n)^{-1/2} [1 - 1/(8n) + 1/(128 n^2) + 5/(1024 n^3) - ...].
Rational central_binomial_exact(unsigned n);
double central_binomial(unsigned n);

// Exponential form of the same asymptotic: coefficient of u^{2m-1}
// (u = 1/n) in the exponent, exact, and the evaluated form
// (pi n)^{-1/2} exp(sum_m term(m)/n^{2m-1}).
Rational central_binomial_exponent_term(int m);
double central_binomial_exponential(unsigned n, int terms);

// First `terms` bracket coefficients of the asymptotic form, exact: the
// series exp of the exponent series above.
std::vector<Rational> central_binomial_bracket(int terms);
double central_binomial_asymptotic(unsigned n, int terms);

// Stirling approximation to ln Gamma(n) and ln n! with k correction terms
// B_2j / (2j (2j-1) n^{2j-1}); the coefficients stay exact until the final
// evaluation.
Rational stirling_coefficient(int j);
double stirling_ln_gamma(double n, int k_terms);
double stirling_ln_factorial(double n, int k_terms);

// Bernoulli / Euler polynomial values in double, for grid checks.
double bernoulli_polynomial_real(int n, double a);
double euler_polynomial_real(int n, double a);

} // namespace genfun
