#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "genfun/catalog.hpp"
#include "genfun/errors.hpp"
#include "genfun/series.hpp"

using namespace genfun;

namespace {
const Catalog& catalog() {
    static const Catalog c;
    return c;
}
} // namespace

TEST_CASE("catalog has the full table") {
    CHECK(catalog().size() >= 35);
    const auto ids = catalog().list_identities();
    CHECK(ids.size() == catalog().size());
    CHECK(ids.front() == "geometric");
    // no duplicates
    const std::set<std::string> unique(ids.begin(), ids.end());
    CHECK(unique.size() == ids.size());
    // every entry carries its citation and metadata
    for (const auto& id : ids) {
        const IdentityEntry& e = catalog().entry(id);
        CHECK(!e.anchor.empty());
        CHECK(!e.description.empty());
        CHECK(e.domain.radius > 0.0);
    }
}

TEST_CASE("lookups") {
    CHECK(catalog().contains("geometric"));
    CHECK(!catalog().contains("nope"));
    CHECK_THROWS_AS(catalog().entry("nope"), UnknownIdentity);
    CHECK_THROWS_AS(catalog().coefficient("geometric", -1), DomainError);
}

TEST_CASE("duplicate registration is rejected") {
    Catalog fresh;
    IdentityEntry e;
    e.id = "geometric";
    e.coefficient = [](int) { return Rational(1); };
    e.closed_form = [](double z) { return 1.0 / (1.0 - z); };
    CHECK_THROWS_AS(fresh.add(std::move(e)), UnknownIdentity);
}

TEST_CASE("rational forms reproduce their coefficient rules by long division") {
    int with_rational = 0;
    for (const auto& id : catalog().list_identities()) {
        const IdentityEntry& e = catalog().entry(id);
        if (!e.rational_form)
            continue;
        ++with_rational;
        const int N = 20;
        const auto& [num, den] = *e.rational_form;
        std::vector<Rational> p(num.begin(), num.end());
        std::vector<Rational> q(den.begin(), den.end());
        p.resize(N + 1, Rational(0));
        q.resize(N + 1, Rational(0));
        const Series quotient = Series(p) / Series(q);
        for (int n = 0; n <= N; ++n) {
            INFO("identity ", id, " coefficient ", n);
            CHECK(quotient.coefficient(n) == e.coefficient(n));
        }
    }
    CHECK(with_rational >= 10);
}

TEST_CASE("spot coefficients") {
    for (int n = 0; n <= 10; ++n)
        CHECK(catalog().coefficient("geometric", n) == Rational(1));
    for (int n = 0; n <= 12; ++n)
        CHECK(catalog().coefficient("n-squared", n) == Rational(n) * Rational(n));
    for (int n = 0; n <= 12; ++n)
        CHECK(catalog().coefficient("n-cubed", n) == Rational(n * n * n));
    CHECK(catalog().coefficient("binomial-half", 2) == Rational(-1, 8));
    CHECK(catalog().coefficient("central-binomial", 3) == Rational(20, 64));
    // alternating structure of cos
    CHECK(catalog().coefficient("cos", 1) == Rational(0));
    CHECK(catalog().coefficient("cos", 2) == Rational(-1, 2));
    CHECK(catalog().coefficient("cos", 4) == Rational(1, 24));
    // catalan numbers scaled by 4^-n: C_3/64 = 5/64
    CHECK(catalog().coefficient("catalan-like", 3) == Rational(5, 64));
    // bernoulli gf
    CHECK(catalog().coefficient("bernoulli-gf", 2) == Rational(1, 12));
    CHECK(catalog().coefficient("bernoulli-gf", 3) == Rational(0));
}

TEST_CASE("the two incomplete-gamma coefficient rules agree") {
    for (int n = 0; n <= 30; ++n)
        CHECK(catalog().coefficient("gamma-star-1", n) ==
              catalog().coefficient("gamma-star-1-alt", n));
}

TEST_CASE("closed forms at plain points") {
    CHECK(catalog().closed_form("geometric", 0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(catalog().closed_form("exp", 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    CHECK(catalog().closed_form("log", 0.5) ==
          doctest::Approx(-std::log(0.5)).epsilon(1e-14));
    // (asin z / z)^2 at 0.5: (pi/3)^2
    CHECK(catalog().closed_form("arcsin-sq", 0.5) ==
          doctest::Approx(std::pow(std::asin(0.5) / 0.5, 2)).epsilon(1e-13));
    // scaled catalan closed form 2(1 - sqrt(1-z))/z
    CHECK(catalog().closed_form("catalan-like", 0.2) ==
          doctest::Approx(2.0 * (1.0 - std::sqrt(0.8)) / 0.2).epsilon(1e-13));
}

TEST_CASE("out-of-domain closed forms are reported as such") {
    CHECK_THROWS_AS(catalog().closed_form("elliptic-k", -0.25), OutOfDomain);
    CHECK_THROWS_AS(catalog().closed_form("tree-k0", -0.1), OutOfDomain);
}

TEST_CASE("series truncations") {
    const Series geo = catalog().series("geometric", 8);
    CHECK(geo.order() == 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(geo.coefficient(n) == Rational(1));
    const Series s = catalog().series("sin", 7);
    CHECK(s.coefficient(3) == Rational(-1, 6));
    CHECK(s.coefficient(4) == Rational(0));
}

TEST_CASE("sample grid respects the radius") {
    const auto pts = catalog().sample_points("geometric");
    REQUIRE(pts.size() == 5);
    CHECK(pts[0] == doctest::Approx(-0.5));
    CHECK(pts[4] == doctest::Approx(0.8));

    // radius 1/e entries scale down
    const auto tree = catalog().sample_points("tree-k0");
    for (double z : tree)
        CHECK(std::fabs(z) < std::exp(-1.0));

    // entire functions cap the scale at 5
    const auto e = catalog().sample_points("exp");
    double maxabs = 0.0;
    for (double z : e)
        maxabs = std::max(maxabs, std::fabs(z));
    CHECK(maxabs <= 5.0);
    CHECK(maxabs >= 2.0);

    // bernoulli gf: radius 2 pi
    const auto b = catalog().sample_points("bernoulli-gf");
    for (double z : b)
        CHECK(std::fabs(z) < 2.0 * 3.14159265358979);
}

TEST_CASE("tree and bethe entries are registered") {
    for (const char* id : {"tree-km3", "tree-km2", "tree-km1", "tree-k0", "tree-kp1",
                           "tree-kp2", "bethe-r1", "bethe-r2", "central-shifted-r1",
                           "central-shifted-r2"}) {
        CHECK(catalog().contains(id));
    }
    CHECK(catalog().domain("tree-k0").radius == doctest::Approx(std::exp(-1.0)));
    CHECK(catalog().domain("bethe-r1").radius == doctest::Approx(0.25));
    // tree-k0 closed form through the w -> x inversion: T_0 at w(0.2)
    const double w = 0.2 * std::exp(-0.2);
    CHECK(catalog().closed_form("tree-k0", w) == doctest::Approx(0.25).epsilon(1e-11));
}
