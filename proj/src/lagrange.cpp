#include "genfun/lagrange.hpp"

#include <cmath>

#include "genfun/catalog.hpp"
#include "genfun/combinatorics.hpp"
#include "genfun/errors.hpp"
#include "genfun/special.hpp"

namespace genfun {

Series lagrange_coefficients(const Series& f, const Series& g, int N) {
    if (N < 1)
        throw NotInvertible("Lagrange expansion needs N >= 1");
    if (f.order() < N || g.order() < N)
        throw NotInvertible("Lagrange expansion needs both series at order >= N");
    if (!f.coefficient(0).is_zero())
        throw NonzeroConstantTerm("Lagrange expansion requires f(0) = 0");
    if (f.coefficient(1).is_zero())
        throw NotInvertible("Lagrange expansion requires f'(0) != 0");

    // Everything happens at order N-1, where coefficient n-1 lives.
    // x/f(x) = 1/(f(x)/x), shifting f down one slot.
    std::vector<Rational> shifted(f.coefficients().begin() + 1,
                                  f.coefficients().begin() + N + 1);
    const Series x_over_f =
        Series::constant(Rational(1), N - 1) / Series(std::move(shifted));
    const Series gp = derive(g.truncate(N)); // order N-1

    std::vector<Rational> out(static_cast<size_t>(N) + 1);
    out[0] = g.coefficient(0);
    Series power = x_over_f; // (x/f)^n
    for (int n = 1; n <= N; ++n) {
        out[static_cast<size_t>(n)] =
            (gp * power).coefficient(n - 1) / Rational(n);
        if (n < N)
            power = power * x_over_f;
    }
    return Series(std::move(out));
}

Rational tree_coefficient(int k, int n) {
    if (n < 0)
        throw IndexBeyondOrder("tree coefficient index must be >= 0");
    if (n == 0)
        return Rational(0);
    const int e = n + k;
    if (e < 0) {
        // n^{n+k} with a negative exponent only happens at n = 1 (k <= -2)
        // and n = 2 (k = -3); the value n^e / n! stays an exact rational.
        return Rational(1) / (Rational(int_pow(BigInt(n), static_cast<unsigned>(-e))) *
                              factorial(static_cast<unsigned>(n)));
    }
    return Rational(int_pow(BigInt(n), static_cast<unsigned>(e))) /
           factorial(static_cast<unsigned>(n));
}

double tree_argument(double x) {
    return x * std::exp(-x);
}

double tree_x_from_w(double w) {
    constexpr double inv_e = 0.36787944117144233;
    if (w < 0.0 || w >= inv_e)
        throw OutOfDomain("tree argument needs 0 <= w < 1/e");
    if (w == 0.0)
        return 0.0;
    // x e^{-x} is increasing on [0, 1); bisect.
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tree_argument(mid) < w)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16 * (1.0 + lo))
            break;
    }
    return 0.5 * (lo + hi);
}

double tree_sum(int k, double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw OutOfDomain("tree sums are evaluated on 0 <= x < 1");
    const double om = 1.0 - x;
    switch (k) {
    case -3:
        // x - 3x^2/4 + x^3/6: antiderivative chain below T_{-1} = x
        return x - 0.75 * x * x + x * x * x / 6.0;
    case -2:
        return x - 0.5 * x * x;
    case -1:
        return x;
    case 0:
        return x / om;
    case 1:
        return x / (om * om * om);
    case 2:
        return x * (1.0 + 2.0 * x) / (om * om * om * om * om);
    default:
        throw OutOfDomain("tree sum closed forms cover -3 <= k <= 2");
    }
}

namespace {

// Series fallback for the surd form near z = 0: 1 - sqrt(1-4z) loses all
// significant digits as z -> 0.
double bethe_gf_series(double r, double z) {
    // 1 + r sum_{n>=1} C(2n+r, n) z^n / (2n+r), real r via the product form.
    double acc = 1.0;
    for (int n = 1; n <= 40; ++n) {
        const double c =
            binomial_real(2.0 * static_cast<double>(n) + r, static_cast<unsigned>(n));
        acc += r * c / (2.0 * static_cast<double>(n) + r) *
               std::pow(z, static_cast<double>(n));
    }
    return acc;
}

} // namespace

double bethe_gf(double r, double z) {
    if (std::fabs(z) >= 0.25)
        throw OutOfDomain("Bethe generating function needs |z| < 1/4");
    if (std::fabs(z) < 1e-4)
        return bethe_gf_series(r, z);
    const double base = (1.0 - std::sqrt(1.0 - 4.0 * z)) / (2.0 * z);
    return std::pow(base, r);
}

Rational bethe_coefficient_factorial(int r, int n) {
    if (n == 0)
        return Rational(1);
    // r (2n+r-1)! / ((n+r)! n!)
    if (2 * n + r - 1 < 0 || n + r < 0)
        throw DomainError("factorial route needs 2n+r-1 >= 0 and n+r >= 0");
    return Rational(r) * factorial(static_cast<unsigned>(2 * n + r - 1)) /
           (factorial(static_cast<unsigned>(n + r)) * factorial(static_cast<unsigned>(n)));
}

Rational bethe_coefficient_pochhammer(int r, int n) {
    if (n == 0)
        return Rational(1);
    // r (n+r+1)_{n-1} / n!
    return Rational(r) * pochhammer(Rational(n + r + 1), static_cast<unsigned>(n - 1)) /
           factorial(static_cast<unsigned>(n));
}

Rational bethe_coefficient_binomial(int r, int n) {
    if (n == 0)
        return Rational(1);
    // r C(2n+r, n) / (2n+r)
    if (2 * n + r <= 0)
        throw DomainError("binomial route needs 2n+r > 0");
    return Rational(r) * Rational(binomial_int(static_cast<unsigned>(2 * n + r),
                                               static_cast<unsigned>(n))) /
           Rational(2 * n + r);
}

Series bethe_series(int r, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = bethe_coefficient_binomial(r, n);
    return Series(std::move(c));
}

double central_shifted(int r, double z) {
    if (std::fabs(z) >= 0.25)
        throw OutOfDomain("shifted central series needs |z| < 1/4");
    return bethe_gf(static_cast<double>(r), z) / std::sqrt(1.0 - 4.0 * z);
}

Rational central_shifted_coefficient(int r, int n) {
    if (2 * n + r < 0 || n < 0)
        throw DomainError("C(2n+r, n) needs nonnegative arguments");
    return Rational(binomial_int(static_cast<unsigned>(2 * n + r),
                                 static_cast<unsigned>(n)));
}

Series central_shifted_series(int r, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        c[static_cast<size_t>(n)] = central_shifted_coefficient(r, n);
    return Series(std::move(c));
}

namespace {

const char* tree_closed_form_text(int k) {
    switch (k) {
    case -3: return "x - 3x^2/4 + x^3/6";
    case -2: return "x - x^2/2";
    case -1: return "x";
    case 0: return "x/(1-x)";
    case 1: return "x/(1-x)^3";
    default: return "x(1+2x)/(1-x)^5";
    }
}

} // namespace

void register_tree_entries(Catalog& catalog) {
    const double inv_e = std::exp(-1.0);
    for (int k = -3; k <= 2; ++k) {
        IdentityEntry e;
        const std::string tag = k < 0 ? "km" + std::to_string(-k) : "kp" + std::to_string(k);
        e.id = "tree-" + (k == 0 ? std::string("k0") : tag);
        e.description = "sum n^{n" + std::string(k < 0 ? "-" : "+") +
                        std::to_string(std::abs(k)) + "} w^n / n! = " + tree_closed_form_text(k) +
                        ", w = x e^{-x}";
        e.anchor = "A&S 3.6.6, f = x e^{-x}";
        e.variable_map = "series in w = x e^{-x}; closed form inverts w -> x on [0, 1)";
        e.domain = {inv_e, k <= -1, "w = 1/e image of x = 1; w < 0 has no preimage"};
        e.coefficient = [k](int n) { return tree_coefficient(k, n); };
        e.closed_form = [k](double w) { return tree_sum(k, tree_x_from_w(w)); };
        catalog.add(std::move(e));
    }
    for (int r = 1; r <= 2; ++r) {
        IdentityEntry e;
        e.id = "bethe-r" + std::to_string(r);
        e.description = "1 + r sum (2n+r-1)! z^n / ((n+r)! n!) = [(1-sqrt(1-4z))/(2z)]^r, r = " +
                        std::to_string(r);
        e.anchor = "A&S 3.6.6, Bethe lattice";
        e.variable_map = "z";
        e.domain = {0.25, true, "branch point at z = 1/4"};
        e.coefficient = [r](int n) { return bethe_coefficient_factorial(r, n); };
        e.closed_form = [r](double z) { return bethe_gf(static_cast<double>(r), z); };
        catalog.add(std::move(e));
    }
    for (int r = 1; r <= 2; ++r) {
        IdentityEntry e;
        e.id = "central-shifted-r" + std::to_string(r);
        e.description = "sum C(2n+r,n) z^n = (1-4z)^{-1/2} [(1-sqrt(1-4z))/(2z)]^r, r = " +
                        std::to_string(r);
        e.anchor = "A&S 3.6.6, Bethe lattice, shifted";
        e.variable_map = "z";
        e.domain = {0.25, false, "inverse-square-root divergence at z = 1/4"};
        e.coefficient = [r](int n) { return central_shifted_coefficient(r, n); };
        e.closed_form = [r](double z) { return central_shifted(r, z); };
        catalog.add(std::move(e));
    }
}

} // namespace genfun
