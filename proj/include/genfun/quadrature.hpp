#pragma once

#include <functional>

#include "genfun/errors.hpp"

namespace genfun {

struct QuadratureOptions {
    double abs_tol = 1e-11;
    int max_depth = 48;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0; // accumulated panel estimates
    long evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Adaptive 15-point Gauss-Legendre on [a, b] with interval bisection.
// A panel converges when |two halves - whole| <= its share of the budget;
// exhausting max_depth throws QuadratureNonConvergence.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureOptions& opt = {});

// integral_a^inf f: the tail is cut where |f| stays below 1e-18, then the
// finite piece is handed to integrate().
QuadratureResult integrate_to_infinity(const Integrand& f, double a,
                                       const QuadratureOptions& opt = {});

// integral_0^b t^{s-1} g(t) dt for s > 0 with g smooth at 0.  The
// substitution t = u^2 moves the endpoint singularity into the weight:
// integrand 2 u^{2s-1} g(u^2), which Gauss nodes (never at the endpoint)
// handle cleanly.
QuadratureResult integrate_power_weighted(const Integrand& g, double s, double b,
                                          const QuadratureOptions& opt = {});

// Same, with the upper limit at infinity.
QuadratureResult integrate_power_weighted_to_infinity(const Integrand& g, double s,
                                                      const QuadratureOptions& opt = {});

} // namespace genfun
