#include "genfun/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "genfun/bernoulli.hpp"
#include "genfun/combinatorics.hpp"
#include "genfun/errors.hpp"
#include "genfun/quadrature.hpp"
#include "genfun/special.hpp"

namespace genfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::vector<Rational> rat(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (long long x : xs)
        out.emplace_back(x);
    return out;
}

double horner(const std::vector<Rational>& p, double z) {
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * z + it->to_double();
    return acc;
}

// Entry whose closed form is a rational function p(z)/q(z); the coefficient
// rule and the polynomial pair are registered together so tests can verify
// one against the other by long division.
IdentityEntry rational_entry(std::string id, std::string description, std::string anchor,
                             std::function<Rational(int)> coefficient,
                             std::vector<Rational> num, std::vector<Rational> den) {
    IdentityEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.anchor = std::move(anchor);
    e.variable_map = "z";
    e.domain = {1.0, false, "pole at z = 1"};
    e.coefficient = std::move(coefficient);
    e.closed_form = [num, den](double z) { return horner(num, z) / horner(den, z); };
    e.rational_form = std::make_pair(std::move(num), std::move(den));
    return e;
}

IdentityEntry plain_entry(std::string id, std::string description, std::string anchor,
                    ConvergenceDomain domain, std::function<Rational(int)> coefficient,
                    std::function<double(double)> closed) {
    IdentityEntry e;
    e.id = std::move(id);
    e.description = std::move(description);
    e.anchor = std::move(anchor);
    e.variable_map = "z";
    e.domain = std::move(domain);
    e.coefficient = std::move(coefficient);
    e.closed_form = std::move(closed);
    return e;
}

double integral_from_zero(const std::function<double(double)>& f, double z) {
    if (z == 0.0)
        return 0.0;
    return integrate(f, 0.0, z).value;
}

Rational one_over_n_nfact(int n) { // 1 / (n * n!)
    return Rational(1) / Rational(BigInt(n) * factorial_int(static_cast<unsigned>(n)));
}

int half_sign(int n) { return ((n / 2) % 2 == 0) ? 1 : -1; } // (-1)^{floor(n/2)}

} // namespace

Catalog::Catalog() {
    // --- rational generating functions -----------------------------------
    add(rational_entry("geometric", "sum z^n = 1/(1-z)", "A&S 3.6.10",
                       [](int) { return Rational(1); }, rat({1}), rat({1, -1})));
    add(rational_entry("n", "sum n z^n = z/(1-z)^2", "A&S 3.6.10, z d/dz",
                       [](int n) { return Rational(n); }, rat({0, 1}), rat({1, -2, 1})));
    add(rational_entry("n-squared", "sum n^2 z^n = (z + z^2)/(1-z)^3", "A&S 3.6.10, (z d/dz)^2",
                       [](int n) { return Rational(BigInt(n) * n); }, rat({0, 1, 1}),
                       rat({1, -3, 3, -1})));
    add(rational_entry("n-cubed", "sum n^3 z^n = (z + 4z^2 + z^3)/(1-z)^4", "A&S 3.6.10, (z d/dz)^3",
                       [](int n) { return Rational(int_pow(BigInt(n), 3)); }, rat({0, 1, 4, 1}),
                       rat({1, -4, 6, -4, 1})));
    add(rational_entry("n-fourth", "sum n^4 z^n = (z + 11z^2 + 11z^3 + z^4)/(1-z)^5",
                       "A&S 3.6.10, (z d/dz)^4",
                       [](int n) { return Rational(int_pow(BigInt(n), 4)); },
                       rat({0, 1, 11, 11, 1}), rat({1, -5, 10, -10, 5, -1})));
    add(rational_entry("n-falling-2", "sum n(n-1) z^n = 2z^2/(1-z)^3", "A&S 3.6.10, z^2 d^2/dz^2",
                       [](int n) { return Rational(BigInt(n) * (n - 1)); }, rat({0, 0, 2}),
                       rat({1, -3, 3, -1})));
    add(rational_entry("binom-n-3", "sum C(n,3) z^n = z^3/(1-z)^4", "A&S 3.6.10, derived",
                       [](int n) { return Rational(binomial_int(static_cast<unsigned>(n), 3)); },
                       rat({0, 0, 0, 1}), rat({1, -4, 6, -4, 1})));
    add(rational_entry("n-plus-1", "sum (n+1) z^n = 1/(1-z)^2", "A&S 3.6.9, s = 2",
                       [](int n) { return Rational(n + 1); }, rat({1}), rat({1, -2, 1})));
    add(rational_entry("n-plus-1-n-plus-2", "sum (n+1)(n+2) z^n = 2/(1-z)^3", "A&S 3.6.9, s = 3",
                       [](int n) { return Rational(BigInt(n + 1) * (n + 2)); }, rat({2}),
                       rat({1, -3, 3, -1})));
    add(rational_entry("binom-n-plus-3", "sum C(n+3,3) z^n = 1/(1-z)^4", "A&S 3.6.9, s = 4",
                       [](int n) { return Rational(binomial_int(static_cast<unsigned>(n) + 3, 3)); },
                       rat({1}), rat({1, -4, 6, -4, 1})));
    add(rational_entry("negative-binomial-3", "sum (3)_n z^n / n! = (1-z)^{-3}", "A&S 3.6.9",
                       [](int n) {
                           return pochhammer(Rational(3), static_cast<unsigned>(n)) /
                                  Rational(factorial_int(static_cast<unsigned>(n)));
                       },
                       rat({1}), rat({1, -3, 3, -1})));

    // --- algebraic closed forms -------------------------------------------
    add(plain_entry("binomial-half", "sum C(1/2,n) z^n = (1+z)^{1/2}", "A&S 3.6.8",
              {1.0, true, "binomial series, converges on |z| = 1"},
              [](int n) { return binomial(Rational(1, 2), static_cast<unsigned>(n)); },
              [](double z) { return std::sqrt(1.0 + z); }));
    add(plain_entry("central-binomial", "sum C(2n,n) z^n / 4^n = (1-z)^{-1/2}", "A&S 3.6.9, s = 1/2",
              {1.0, false, "diverges at z = 1, converges at z = -1"},
              [](int n) { return central_binomial_exact(static_cast<unsigned>(n)); },
              [](double z) { return 1.0 / std::sqrt(1.0 - z); }));
    add(plain_entry("catalan-like", "sum C(2n,n) z^n / (4^n (n+1)) = 2(1 - sqrt(1-z))/z",
              "A&S 3.6.9, integrated",
              {1.0, true, "coefficients ~ n^{-3/2}"},
              [](int n) {
                  return central_binomial_exact(static_cast<unsigned>(n)) / Rational(n + 1);
              },
              [](double z) {
                  if (std::fabs(z) < 0.01) {
                      // partial sum dodges the 1 - sqrt(1-z) cancellation
                      double acc = 0.0;
                      for (int n = 20; n >= 0; --n)
                          acc = acc * z +
                                (central_binomial_exact(static_cast<unsigned>(n)) / Rational(n + 1))
                                    .to_double();
                      return acc;
                  }
                  return 2.0 * (1.0 - std::sqrt(1.0 - z)) / z;
              }));
    add(plain_entry("catalan-like-2",
              "sum C(2n,n) z^n / (4^n (n+1)(n+2)) = 4[(1-z)^{3/2} - 1 + 3z/2]/(3z^2)",
              "A&S 3.6.9, integrated twice",
              {1.0, true, "coefficients ~ n^{-5/2}"},
              [](int n) {
                  return central_binomial_exact(static_cast<unsigned>(n)) /
                         Rational(BigInt(n + 1) * (n + 2));
              },
              [](double z) {
                  if (std::fabs(z) < 0.01) {
                      double acc = 0.0;
                      for (int n = 20; n >= 0; --n)
                          acc = acc * z + (central_binomial_exact(static_cast<unsigned>(n)) /
                                           Rational(BigInt(n + 1) * (n + 2)))
                                              .to_double();
                      return acc;
                  }
                  return 4.0 * (std::pow(1.0 - z, 1.5) - 1.0 + 1.5 * z) / (3.0 * z * z);
              }));

    // --- log and inverse trigonometric ------------------------------------
    add(plain_entry("log", "sum z^n / n = -ln(1-z)", "A&S 4.1.24",
              {1.0, false, "diverges at z = 1, conditionally convergent at z = -1"},
              [](int n) { return n == 0 ? Rational(0) : Rational(1, n); },
              [](double z) { return -std::log1p(-z); }));
    add(plain_entry("dilog", "sum z^n / n^2 = g_2(z)", "A&S 27.7.1",
              {1.0, true, "converges on the whole boundary"},
              [](int n) { return n == 0 ? Rational(0) : Rational(1) / Rational(BigInt(n) * n); },
              [](double z) { return polylog(2.0, z); }));
    add(plain_entry("polylog-3", "sum z^n / n^3 = g_3(z)", "A&S 27.7.1, s = 3",
              {1.0, true, "converges on the whole boundary"},
              [](int n) {
                  return n == 0 ? Rational(0) : Rational(1) / Rational(int_pow(BigInt(n), 3));
              },
              [](double z) { return polylog(3.0, z); }));
    add(plain_entry("arctanh", "sum z^{2n+1} / (2n+1) = arctanh z", "A&S 4.6.22, 4.6.33",
              {1.0, false, "diverges at |z| = 1"},
              [](int n) { return n % 2 == 1 ? Rational(1, n) : Rational(0); },
              [](double z) { return std::atanh(z); }));
    add(plain_entry("arctan", "sum (-1)^n z^{2n+1} / (2n+1) = arctan z", "A&S 4.4.42",
              {1.0, true, "alternating on |z| = 1 (Leibniz)"},
              [](int n) {
                  return n % 2 == 1 ? Rational(half_sign(n), n) : Rational(0);
              },
              [](double z) { return std::atan(z); }));
    add(plain_entry("arcsin", "sum C(2n,n) z^{2n+1} / (4^n (2n+1)) = arcsin z", "A&S 4.4.40",
              {1.0, true, "coefficients ~ n^{-3/2}"},
              [](int n) {
                  if (n % 2 == 0)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n - 1) / 2;
                  return central_binomial_exact(k) / Rational(n);
              },
              [](double z) { return std::asin(z); }));
    add(plain_entry("arcsinh", "sum (-1)^n C(2n,n) z^{2n+1} / (4^n (2n+1)) = arcsinh z", "A&S 4.6.31",
              {1.0, true, "alternating, coefficients ~ n^{-3/2}"},
              [](int n) {
                  if (n % 2 == 0)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n - 1) / 2;
                  return Rational(half_sign(n)) * central_binomial_exact(k) / Rational(n);
              },
              [](double z) { return std::asinh(z); }));
    add(plain_entry("arcsin-sq", "sum 4^n (n!)^2 z^{2n} / ((n+1)(2n+1)!) = (arcsin(z)/z)^2",
              "A&S 4.4.40, squared",
              {1.0, true, "coefficients ~ n^{-3/2}"},
              [](int n) {
                  if (n % 2 == 1)
                      return Rational(0);
                  const unsigned j = static_cast<unsigned>(n) / 2;
                  const BigInt num = int_pow(BigInt(4), j) * int_pow(factorial_int(j), 2);
                  const BigInt den = BigInt(j + 1) * factorial_int(2 * j + 1);
                  return Rational(num, den);
              },
              [](double z) {
                  if (z == 0.0)
                      return 1.0;
                  const double a = std::asin(z) / z;
                  return a * a;
              }));
    add(plain_entry("arcsinh-sq", "sum (-1)^n 4^n (n!)^2 z^{2n} / ((n+1)(2n+1)!) = (arcsinh(z)/z)^2",
              "A&S 4.6.31, squared",
              {1.0, true, "alternating"},
              [](int n) {
                  if (n % 2 == 1)
                      return Rational(0);
                  const unsigned j = static_cast<unsigned>(n) / 2;
                  const BigInt num = int_pow(BigInt(4), j) * int_pow(factorial_int(j), 2);
                  const BigInt den = BigInt(j + 1) * factorial_int(2 * j + 1);
                  return Rational(j % 2 == 0 ? num : -num, den);
              },
              [](double z) {
                  if (z == 0.0)
                      return 1.0;
                  const double a = std::asinh(z) / z;
                  return a * a;
              }));

    // --- exponential, trigonometric, hyperbolic ----------------------------
    add(plain_entry("exp", "sum z^n / n! = e^z", "A&S 4.2.1", {kInf, false, "entire"},
              [](int n) { return Rational(1) / Rational(factorial_int(static_cast<unsigned>(n))); },
              [](double z) { return std::exp(z); }));
    add(plain_entry("sinh", "sum z^{2n+1} / (2n+1)! = sinh z", "A&S 4.5.62", {kInf, false, "entire"},
              [](int n) {
                  return n % 2 == 1
                             ? Rational(1) / Rational(factorial_int(static_cast<unsigned>(n)))
                             : Rational(0);
              },
              [](double z) { return std::sinh(z); }));
    add(plain_entry("sin", "sum (-1)^n z^{2n+1} / (2n+1)! = sin z", "A&S 4.3.65", {kInf, false, "entire"},
              [](int n) {
                  return n % 2 == 1
                             ? Rational(half_sign(n)) /
                                   Rational(factorial_int(static_cast<unsigned>(n)))
                             : Rational(0);
              },
              [](double z) { return std::sin(z); }));
    add(plain_entry("cosh", "sum z^{2n} / (2n)! = cosh z", "A&S 4.5.63", {kInf, false, "entire"},
              [](int n) {
                  return n % 2 == 0
                             ? Rational(1) / Rational(factorial_int(static_cast<unsigned>(n)))
                             : Rational(0);
              },
              [](double z) { return std::cosh(z); }));
    add(plain_entry("cos", "sum (-1)^n z^{2n} / (2n)! = cos z", "A&S 4.3.66", {kInf, false, "entire"},
              [](int n) {
                  return n % 2 == 0
                             ? Rational(half_sign(n)) /
                                   Rational(factorial_int(static_cast<unsigned>(n)))
                             : Rational(0);
              },
              [](double z) { return std::cos(z); }));

    // --- exponential and trigonometric integrals ---------------------------
    // Closed forms are adaptive quadrature of the defining integrals, so the
    // comparison is series vs integral, not series vs series.
    add(plain_entry("ei-series", "sum z^n / (n n!) = integral_0^z (e^t - 1)/t dt = Ei(z)-gamma-ln z",
              "A&S 5.1.10", {kInf, false, "entire"},
              [](int n) { return n == 0 ? Rational(0) : one_over_n_nfact(n); },
              [](double z) {
                  return integral_from_zero([](double t) { return std::expm1(t) / t; }, z);
              }));
    add(plain_entry("e1-series",
              "sum (-1)^{n+1} z^n / (n n!) = integral_0^z (1 - e^{-t})/t dt = E1(z)+gamma+ln z",
              "A&S 5.1.11", {kInf, false, "entire"},
              [](int n) {
                  if (n == 0)
                      return Rational(0);
                  const Rational c = one_over_n_nfact(n);
                  return n % 2 == 1 ? c : -c;
              },
              [](double z) {
                  return integral_from_zero([](double t) { return -std::expm1(-t) / t; }, z);
              }));
    add(plain_entry("shi", "sum z^{2n+1} / ((2n+1)(2n+1)!) = integral_0^z sinh(t)/t dt = Shi(z)",
              "A&S 5.2.3, 5.2.17", {kInf, false, "entire"},
              [](int n) { return n % 2 == 1 ? one_over_n_nfact(n) : Rational(0); },
              [](double z) {
                  return integral_from_zero([](double t) { return std::sinh(t) / t; }, z);
              }));
    add(plain_entry("si", "sum (-1)^n z^{2n+1} / ((2n+1)(2n+1)!) = integral_0^z sin(t)/t dt = Si(z)",
              "A&S 5.2.1, 5.2.19", {kInf, false, "entire"},
              [](int n) {
                  if (n % 2 == 0)
                      return Rational(0);
                  const Rational c = one_over_n_nfact(n);
                  return Rational(half_sign(n)) * c;
              },
              [](double z) {
                  return integral_from_zero([](double t) { return std::sin(t) / t; }, z);
              }));
    add(plain_entry("chi-series",
              "sum z^{2n} / (2n (2n)!) = integral_0^z (cosh t - 1)/t dt = Chi(z)-gamma-ln z",
              "A&S 5.2.4, 5.2.18", {kInf, false, "entire"},
              [](int n) { return (n >= 2 && n % 2 == 0) ? one_over_n_nfact(n) : Rational(0); },
              [](double z) {
                  return integral_from_zero(
                      [](double t) {
                          const double s = std::sinh(0.5 * t);
                          return 2.0 * s * s / t;
                      },
                      z);
              }));
    add(plain_entry("ci-series",
              "sum (-1)^n z^{2n} / (2n (2n)!) = integral_0^z (cos t - 1)/t dt = Ci(z)-gamma-ln z",
              "A&S 5.2.2, 5.2.16", {kInf, false, "entire"},
              [](int n) {
                  if (n < 2 || n % 2 == 1)
                      return Rational(0);
                  const Rational c = one_over_n_nfact(n);
                  return (n / 2) % 2 == 1 ? -c : c;
              },
              [](double z) {
                  return integral_from_zero(
                      [](double t) {
                          const double s = std::sin(0.5 * t);
                          return -2.0 * s * s / t;
                      },
                      z);
              }));

    // --- incomplete gamma and error function -------------------------------
    add(plain_entry("gamma-star-1", "e^{-z} sum z^n / (n+1)! = gamma*(1,z), via Cauchy product",
              "A&S 6.5.29", {kInf, false, "entire"},
              [](int n) {
                  // coefficient of z^n in e^{-z} * sum z^j/(j+1)!
                  Rational acc(0);
                  for (int i = 0; i <= n; ++i) {
                      const Rational t =
                          Rational(1) / Rational(factorial_int(static_cast<unsigned>(i)) *
                                                 factorial_int(static_cast<unsigned>(n - i) + 1));
                      acc = acc + (i % 2 == 0 ? t : -t);
                  }
                  return acc;
              },
              [](double z) { return z == 0.0 ? 1.0 : -std::expm1(-z) / z; }));
    add(plain_entry("gamma-star-1-alt", "sum (-1)^n z^n / ((1+n) n!) = gamma*(1,z)", "A&S 6.5.29",
              {kInf, false, "entire; alternating companion form"},
              [](int n) {
                  const Rational c = Rational(1) / Rational(BigInt(n + 1) *
                                                            factorial_int(static_cast<unsigned>(n)));
                  return n % 2 == 0 ? c : -c;
              },
              [](double z) { return z == 0.0 ? 1.0 : -std::expm1(-z) / z; }));
    add(plain_entry("erf-series", "sum (-1)^n z^{2n+1} / ((2n+1) n!) = (sqrt(pi)/2) erf z", "A&S 7.1.5",
              {kInf, false, "entire"},
              [](int n) {
                  if (n % 2 == 0)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n - 1) / 2;
                  const Rational c = Rational(1) / Rational(BigInt(n) * factorial_int(k));
                  return Rational(half_sign(n)) * c;
              },
              [](double z) { return 0.5 * std::sqrt(kPi) * std::erf(z); }));
    add(plain_entry("erf-series-scaled",
              "sum 4^n n! z^{2n+1} / (2n+1)! = (sqrt(pi)/2) e^{z^2} erf z", "A&S 7.1.5, 7.1.6",
              {kInf, false, "entire, all terms positive"},
              [](int n) {
                  if (n % 2 == 0)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n - 1) / 2;
                  return Rational(int_pow(BigInt(4), k) * factorial_int(k),
                                  factorial_int(2 * k + 1));
              },
              [](double z) { return 0.5 * std::sqrt(kPi) * std::exp(z * z) * std::erf(z); }));

    // --- Bessel -------------------------------------------------------------
    add(plain_entry("bessel-j0", "sum (-1)^n z^{2n} / (4^n (n!)^2) = J_0(z)", "A&S 9.1.12",
              {kInf, false, "entire"},
              [](int n) {
                  if (n % 2 == 1)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n) / 2;
                  const Rational c =
                      Rational(1) / Rational(int_pow(BigInt(4), k) * int_pow(factorial_int(k), 2));
                  return k % 2 == 0 ? c : -c;
              },
              [](double z) { return bessel_j(0.0, z); }));
    add(plain_entry("bessel-i0", "sum z^{2n} / (4^n (n!)^2) = I_0(z)", "A&S 9.1.12",
              {kInf, false, "entire"},
              [](int n) {
                  if (n % 2 == 1)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n) / 2;
                  return Rational(1) /
                         Rational(int_pow(BigInt(4), k) * int_pow(factorial_int(k), 2));
              },
              [](double z) { return bessel_i(0.0, z); }));
    add(plain_entry("bessel-j1", "sum (-1)^n z^{2n} / (4^n n! (n+1)!) = (2/z) J_1(z)", "A&S 9.1.10",
              {kInf, false, "entire"},
              [](int n) {
                  if (n % 2 == 1)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n) / 2;
                  const Rational c = Rational(1) / Rational(int_pow(BigInt(4), k) *
                                                            factorial_int(k) * factorial_int(k + 1));
                  return k % 2 == 0 ? c : -c;
              },
              [](double z) { return z == 0.0 ? 1.0 : 2.0 * bessel_j(1.0, z) / z; }));
    add(plain_entry("bessel-i1", "sum z^{2n} / (4^n n! (n+1)!) = (2/z) I_1(z)", "A&S 9.1.10",
              {kInf, false, "entire"},
              [](int n) {
                  if (n % 2 == 1)
                      return Rational(0);
                  const unsigned k = static_cast<unsigned>(n) / 2;
                  return Rational(1) / Rational(int_pow(BigInt(4), k) * factorial_int(k) *
                                                factorial_int(k + 1));
              },
              [](double z) { return z == 0.0 ? 1.0 : 2.0 * bessel_i(1.0, z) / z; }));

    // --- complete elliptic integrals ---------------------------------------
    add(plain_entry("elliptic-k", "sum [C(2n,n)/4^n]^2 z^n = 2 K(z)/pi", "A&S 17.3.11",
              {1.0, false, "K has a log singularity at z = 1; z < 0 skipped"},
              [](int n) {
                  const Rational c = central_binomial_exact(static_cast<unsigned>(n));
                  return c * c;
              },
              [](double z) { return 2.0 * elliptic_k(z) / kPi; }));
    add(plain_entry("elliptic-e", "sum [C(2n,n)/4^n]^2 z^n / (2n-1) = 1 - 2 E(z)/pi", "A&S 17.3.12",
              {1.0, true, "converges at z = 1 (E(1) = 1); z < 0 skipped"},
              [](int n) {
                  if (n == 0)
                      return Rational(0);
                  const Rational c = central_binomial_exact(static_cast<unsigned>(n));
                  return c * c / Rational(2 * n - 1);
              },
              [](double z) { return 1.0 - 2.0 * elliptic_e(z) / kPi; }));

    // --- Bernoulli / Euler generating functions -----------------------------
    add(plain_entry("bernoulli-gf", "sum B_n z^n / n! = z/(e^z - 1)", "A&S 23.1.1",
              {2.0 * kPi, false, "poles at z = +/- 2 pi i"},
              [](int n) {
                  return bernoulli_number(n) / Rational(factorial_int(static_cast<unsigned>(n)));
              },
              [](double z) { return z == 0.0 ? 1.0 : z / std::expm1(z); }));
    add(plain_entry("euler-gf", "sum E_n(0) z^n / n! = 2/(e^z + 1)", "A&S 23.1.1",
              {kPi, false, "poles at z = +/- pi i"},
              [](int n) { return euler_gf0_coefficient(n); },
              [](double z) { return 2.0 / (std::exp(z) + 1.0); }));

    register_tree_entries(*this);
}

void Catalog::add(IdentityEntry e) {
    if (index_.count(e.id) != 0)
        throw UnknownIdentity("duplicate identity id: " + e.id);
    index_[e.id] = entries_.size();
    entries_.push_back(std::move(e));
}

bool Catalog::contains(const std::string& id) const { return index_.count(id) != 0; }

const IdentityEntry& Catalog::entry(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end())
        throw UnknownIdentity("no identity named '" + id + "'");
    return entries_[it->second];
}

std::vector<std::string> Catalog::list_identities() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(e.id);
    return out;
}

std::size_t Catalog::size() const { return entries_.size(); }

Rational Catalog::coefficient(const std::string& id, int n) const {
    if (n < 0)
        throw DomainError("coefficient index must be >= 0");
    return entry(id).coefficient(n);
}

double Catalog::closed_form(const std::string& id, double z) const {
    const IdentityEntry& e = entry(id);
    try {
        return e.closed_form(z);
    } catch (const OutOfDomain&) {
        throw;
    } catch (const DomainError& err) {
        throw OutOfDomain(err.what());
    } catch (const PoleAtOne& err) {
        throw OutOfDomain(err.what());
    } catch (const PoleAtNonpositiveInteger& err) {
        throw OutOfDomain(err.what());
    }
}

const ConvergenceDomain& Catalog::domain(const std::string& id) const {
    return entry(id).domain;
}

Series Catalog::series(const std::string& id, int order) const {
    const IdentityEntry& e = entry(id);
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int n = 0; n <= order; ++n)
        coeffs[static_cast<std::size_t>(n)] = e.coefficient(n);
    return Series(std::move(coeffs));
}

std::vector<double> Catalog::sample_points(const std::string& id) const {
    const ConvergenceDomain& d = entry(id).domain;
    const double scale = std::isinf(d.radius) ? 5.0 : d.radius;
    return {-0.5 * scale, -0.1 * scale, 0.1 * scale, 0.5 * scale, 0.8 * scale};
}

} // namespace genfun
