// Release gate: every published claim of the library, one line of output
// each, exit 0 only if all hold.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "genfun/bernoulli.hpp"
#include "genfun/catalog.hpp"
#include "genfun/check.hpp"
#include "genfun/combinatorics.hpp"
#include "genfun/lagrange.hpp"
#include "genfun/series.hpp"
#include "genfun/special.hpp"

using namespace genfun;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

int g_failures = 0;

void report(int index, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", index, detail.c_str());
    if (!ok)
        ++g_failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// 1. the full verification suite at default settings
void criterion_full_suite(const Catalog& catalog) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport suite = run_suite(catalog, CheckConfig{});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = suite.failed == 0 && catalog.size() >= 35 && seconds <= 60.0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "full suite: %d/%d checks pass (%zu identities), %.1f s", suite.passed,
                  suite.total, catalog.size(), seconds);
    report(1, ok, detail);
    if (suite.failed != 0)
        for (const auto& rep : suite.checks)
            if (!rep.pass)
                std::printf("       failing check: %s (worst point %d)\n", rep.id.c_str(),
                            rep.worst_point);
}

// 2. named constants
void criterion_constants() {
    const double pi = std::numbers::pi;
    const bool ok_gamma = std::fabs(euler_gamma() - 0.57721566490153286060) <= 1e-13;
    const bool ok_zeta2 = std::fabs(zeta(2.0) - pi * pi / 6.0) <= 1e-12;
    const bool ok_zeta0 = std::fabs(zeta(0.0) + 0.5) <= 1e-14;
    const bool ok_ghalf = std::fabs(genfun::gamma(0.5) - std::sqrt(pi)) <= 1e-13;
    report(2, ok_gamma && ok_zeta2 && ok_zeta0 && ok_ghalf,
           "constants: euler_gamma " + fmt(std::fabs(euler_gamma() - 0.57721566490153286060)) +
               ", zeta(2) " + fmt(std::fabs(zeta(2.0) - pi * pi / 6.0)) + ", zeta(0) " +
               fmt(std::fabs(zeta(0.0) + 0.5)) + ", gamma(1/2) " +
               fmt(std::fabs(genfun::gamma(0.5) - std::sqrt(pi))));
}

// 3. reversion of z e^{-z} and compose round-trips
void criterion_reversion() {
    const int N = 20;
    std::vector<Rational> c(N + 1, Rational(0));
    for (int n = 1; n <= N; ++n)
        c[static_cast<std::size_t>(n)] =
            Rational((n % 2 == 0) ? -1 : 1) / factorial(static_cast<unsigned>(n) - 1);
    const Series f(c);
    const Series g = revert(f);
    bool ok = true;
    for (int n = 1; n <= N; ++n) {
        const Rational expected(int_pow(BigInt(n), static_cast<unsigned>(n) - 1),
                                factorial_int(static_cast<unsigned>(n)));
        ok = ok && g.coefficient(n) == expected;
    }
    ok = ok && compose(f, g) == Series::identity(N);
    ok = ok && compose(g, f) == Series::identity(N);
    report(3, ok, "reversion: tree coefficients n^{n-1}/n! exact to n = 20, "
                  "compose round-trips exact");
}

// 4. tree ladder partial sums, exact-rational accumulation
void criterion_tree_ladder() {
    bool ok = true;
    double worst = 0.0;
    for (int k = -3; k <= 2; ++k) {
        for (double x : {0.1, 0.3, 0.5}) {
            const Rational w = Rational::from_double(tree_argument(x));
            Rational sum(0);
            Rational wn(1);
            for (int n = 1; n <= 200; ++n) {
                wn *= w;
                sum += tree_coefficient(k, n) * wn;
            }
            const double err = std::fabs(sum.to_double() - tree_sum(k, x));
            worst = std::max(worst, err);
            ok = ok && err <= 1e-10;
        }
    }
    report(4, ok, "tree ladder: 200-term exact partial sums vs closed forms, worst |err| = " +
                      fmt(worst));
}

// 5. Bethe lattice coefficient routes and multiplicativity
void criterion_bethe() {
    bool ok = true;
    for (int r : {1, 2, 3, 5})
        for (int n = 0; n <= 20; ++n) {
            const Rational a = bethe_coefficient_factorial(r, n);
            ok = ok && a == bethe_coefficient_pochhammer(r, n) &&
                 a == bethe_coefficient_binomial(r, n);
        }
    ok = ok && bethe_series(1, 15) * bethe_series(2, 15) == bethe_series(3, 15);
    ok = ok && bethe_series(2, 15) * bethe_series(3, 15) == bethe_series(5, 15);
    report(5, ok, "bethe family: three coefficient routes identical (r in {1,2,3,5}, "
                  "n <= 20), series multiplicativity exact to order 15");
}

// 6. series vs integral representations
void criterion_integrals() {
    bool ok = true;
    std::string failing;
    for (const std::string& id : quadrature_check_ids()) {
        const CheckReport rep = quadrature_check(id, CheckConfig{});
        if (!rep.pass) {
            ok = false;
            failing += " " + id;
        }
    }
    report(6, ok,
           ok ? "integral cross-checks: all " + std::to_string(quadrature_check_ids().size()) +
                    " families agree to 1e-9"
              : "integral cross-checks failing:" + failing);
}

// 7. polylog branch overlap
void criterion_polylog_branches() {
    bool ok = true;
    double worst = 0.0;
    for (double s : {1.5, 2.0, 3.0}) {
        for (double z = 0.45; z <= 0.5501; z += 0.025) {
            const double diff = std::fabs(polylog_sum_path(s, z) - polylog_expansion_path(s, z));
            worst = std::max(worst, diff);
            ok = ok && diff <= 1e-8;
        }
    }
    report(7, ok, "polylog branches: direct sum vs log-expansion on z in [0.45, 0.55], "
                  "worst |diff| = " +
                      fmt(worst));
}

// 8. asymptotics: Stirling remainder bound and the central-binomial form
void criterion_asymptotics() {
    using boost::multiprecision::log;
    const Float50 pi_hp("3.14159265358979323846264338327950288419716939937510582097494459");
    bool ok = true;
    double worst_ratio = 0.0;
    for (int n : {10, 20, 50}) {
        const Float50 nf(n);
        const Float50 exact = log(Float50(factorial_int(static_cast<unsigned>(n))));
        for (int k = 2; k <= 4; ++k) {
            Float50 approx = (nf + Float50(0.5)) * log(nf) - nf +
                             Float50(0.5) * log(2 * pi_hp);
            for (int j = 1; j <= k; ++j) {
                const Rational cj = stirling_coefficient(j);
                approx += Float50(cj.numerator()) / Float50(cj.denominator()) /
                          pow(nf, 2 * j - 1);
            }
            const Rational cnext = stirling_coefficient(k + 1);
            const Float50 omitted = abs(Float50(cnext.numerator()) /
                                        Float50(cnext.denominator()) / pow(nf, 2 * k + 1));
            const Float50 err = abs(exact - approx);
            worst_ratio = std::max(worst_ratio, (err / omitted).convert_to<double>());
            ok = ok && err <= omitted;
        }
    }

    const double exact100 = central_binomial(100);
    const double asym100 = central_binomial_asymptotic(100, 4);
    const double rel = std::fabs(asym100 - exact100) / exact100;
    ok = ok && rel <= 1e-9;
    report(8, ok,
           "asymptotics: Stirling remainder within first omitted term (worst ratio " +
               fmt(worst_ratio) + "), central binomial n=100 rel err " + fmt(rel));
}

// 9. Bernoulli/Euler generating functions as exact series identities
void criterion_bernoulli_gf() {
    const int N = 16;
    std::vector<Rational> c;
    for (int n = 0; n <= N; ++n)
        c.push_back(Rational(1) / factorial(static_cast<unsigned>(n) + 1));
    const Series em1_over_z(c); // (e^z - 1)/z
    const Series bgf = Series::constant(Rational(1), N) / em1_over_z;
    bool ok = true;
    for (int n = 0; n <= N; ++n)
        ok = ok && bgf.coefficient(n) ==
                       bernoulli_number(n) / factorial(static_cast<unsigned>(n));

    std::vector<Rational> ec;
    for (int n = 0; n <= N; ++n)
        ec.push_back(Rational(1) / factorial(static_cast<unsigned>(n)));
    const Series expz(ec);
    const Series egf =
        Series::constant(Rational(2), N) / (expz + Series::constant(Rational(1), N));
    for (int n = 0; n <= N; ++n)
        ok = ok && egf.coefficient(n) == euler_gf0_coefficient(n);

    ok = ok && bernoulli_number(2) == Rational(1, 6);
    for (int n = 3; n <= 31; n += 2)
        ok = ok && bernoulli_number(n) == Rational(0);
    report(9, ok, "generating functions: z/(e^z-1) and 2/(e^z+1) coefficient-exact to "
                  "order 16, B_2 = 1/6, odd B_n = 0");
}

} // namespace

int main() {
    const Catalog catalog;
    criterion_full_suite(catalog);
    criterion_constants();
    criterion_reversion();
    criterion_tree_ladder();
    criterion_bethe();
    criterion_integrals();
    criterion_polylog_branches();
    criterion_asymptotics();
    criterion_bernoulli_gf();
    if (g_failures == 0)
        std::printf("all 9 acceptance checks pass\n");
    else
        std::printf("%d acceptance check(s) failing\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
