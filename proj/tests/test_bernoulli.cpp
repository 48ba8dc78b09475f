#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "genfun/bernoulli.hpp"
#include "genfun/combinatorics.hpp"
#include "genfun/series.hpp"

using namespace genfun;

TEST_CASE("bernoulli numbers match the classical table") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(6) == Rational(1, 42));
    CHECK(bernoulli_number(8) == Rational(-1, 30));
    CHECK(bernoulli_number(10) == Rational(5, 66));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (int n = 3; n <= 31; n += 2)
        CHECK(bernoulli_number(n) == Rational(0));
}

TEST_CASE("euler numbers match the classical table") {
    CHECK(euler_number(0) == Rational(1));
    CHECK(euler_number(2) == Rational(-1));
    CHECK(euler_number(4) == Rational(5));
    CHECK(euler_number(6) == Rational(-61));
    CHECK(euler_number(8) == Rational(1385));
    CHECK(euler_number(10) == Rational(-50521));
    for (int n = 1; n <= 15; n += 2)
        CHECK(euler_number(n) == Rational(0));
}

TEST_CASE("generating-function coefficients divide out the factorial") {
    BernoulliTable table(20);
    for (int n = 0; n <= 20; ++n)
        CHECK(table.gf_coefficient(n) ==
              bernoulli_number(n) / factorial(static_cast<unsigned>(n)));
}

TEST_CASE("z/(e^z - 1) rebuilt from scratch matches the table") {
    const int N = 16;
    // (e^z - 1)/z has coefficients 1/(n+1)!
    std::vector<Rational> c;
    for (int n = 0; n <= N; ++n)
        c.push_back(Rational(1) / factorial(static_cast<unsigned>(n) + 1));
    const Series denom(c);
    const Series gf = Series::constant(Rational(1), N) / denom;
    for (int n = 0; n <= N; ++n)
        CHECK(gf.coefficient(n) ==
              bernoulli_number(n) / factorial(static_cast<unsigned>(n)));
}

TEST_CASE("2/(e^z + 1) coefficients") {
    const int N = 16;
    std::vector<Rational> c;
    for (int n = 0; n <= N; ++n)
        c.push_back(Rational(1) / factorial(static_cast<unsigned>(n)));
    const Series expz(c);
    const Series gf =
        Series::constant(Rational(2), N) / (expz + Series::constant(Rational(1), N));
    for (int n = 0; n <= N; ++n)
        CHECK(gf.coefficient(n) == euler_gf0_coefficient(n));
    // and the coefficients are E_n(0)/n!
    for (int n = 0; n <= N; ++n)
        CHECK(euler_gf0_coefficient(n) ==
              euler_polynomial(n, Rational(0)) / factorial(static_cast<unsigned>(n)));
}

TEST_CASE("bernoulli polynomials") {
    // B_2(a) = a^2 - a + 1/6
    const Rational a(3, 7);
    CHECK(bernoulli_polynomial(2, a) == a * a - a + Rational(1, 6));
    // B_n(0) = B_n
    for (int n = 0; n <= 12; ++n)
        CHECK(bernoulli_polynomial(n, Rational(0)) == bernoulli_number(n));
    // B_n(1) = (-1)^n B_n
    for (int n = 0; n <= 12; ++n)
        CHECK(bernoulli_polynomial(n, Rational(1)) ==
              (n % 2 == 0 ? bernoulli_number(n) : -bernoulli_number(n)));
    // forward difference B_n(a+1) - B_n(a) = n a^{n-1}
    for (int n = 1; n <= 10; ++n)
        CHECK(bernoulli_polynomial(n, a + Rational(1)) - bernoulli_polynomial(n, a) ==
              Rational(n) * rational_pow(a, n - 1));
}

TEST_CASE("euler polynomials") {
    const Rational a(2, 5);
    // E_2(a) = a^2 - a
    CHECK(euler_polynomial(2, a) == a * a - a);
    // E_n(a+1) + E_n(a) = 2 a^n
    for (int n = 0; n <= 10; ++n)
        CHECK(euler_polynomial(n, a + Rational(1)) + euler_polynomial(n, a) ==
              Rational(2) * rational_pow(a, n));
    // 2^n E_n(1/2) = E_n
    for (int n = 0; n <= 12; ++n)
        CHECK(rational_pow(Rational(2), n) * euler_polynomial(n, Rational(1, 2)) ==
              euler_number(n));
}
