#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "genfun/catalog.hpp"
#include "genfun/check.hpp"
#include "genfun/errors.hpp"
#include "genfun/quadrature.hpp"
#include "genfun/special.hpp"

using namespace genfun;

namespace {
const Catalog& catalog() {
    static const Catalog c;
    return c;
}
} // namespace

TEST_CASE("config validation") {
    CHECK_NOTHROW(validate(CheckConfig{}));
    CheckConfig bad;
    bad.terms = 4;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = CheckConfig{};
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
    bad = CheckConfig{};
    bad.rel_tol = -1.0;
    CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("config parsing") {
    const CheckConfig cfg = parse_config("# harness settings\n"
                                         "terms = 64\n"
                                         "abs_tol = 1e-6\n"
                                         "rel_tol=2e-9\n"
                                         "\n"
                                         "quadrature_tol = 1e-10  # inline comment\n");
    CHECK(cfg.terms == 64);
    CHECK(cfg.abs_tol == 1e-6);
    CHECK(cfg.rel_tol == 2e-9);
    CHECK(cfg.quadrature_tol == 1e-10);
    CHECK(cfg.sample_policy == CheckConfig{}.sample_policy);

    CHECK_THROWS_AS(parse_config("frobs = 3\n"), DomainError);
    CHECK_THROWS_AS(parse_config("terms = not-a-number\n"), DomainError);
    CHECK_THROWS_AS(parse_config("justtext\n"), DomainError);
    CHECK(parse_config("") == CheckConfig{});
}

TEST_CASE("geometric identity passes at defaults") {
    const CheckReport rep = check_identity(catalog(), "geometric", CheckConfig{});
    CHECK(rep.pass);
    CHECK(rep.id == "geometric");
    CHECK(rep.points.size() == 5);
    for (const auto& p : rep.points) {
        CHECK(!p.skipped);
        CHECK(p.abs_err <= 1e-9);
    }
    CHECK(rep.worst_point >= 0);
    CHECK(rep.worst_point < 5);
}

TEST_CASE("every catalog identity passes at defaults") {
    const CheckConfig cfg;
    for (const auto& id : catalog().list_identities()) {
        const CheckReport rep = check_identity(catalog(), id, cfg);
        INFO("identity ", id, ", worst point ", rep.worst_point);
        CHECK(rep.pass);
    }
}

TEST_CASE("a short partial sum fails with the worst point identified") {
    CheckConfig cfg;
    cfg.terms = 8;
    const CheckReport rep = check_identity(catalog(), "dilog", cfg);
    CHECK(!rep.pass);
    // the slowest point of the grid is z = 0.8, the last one
    CHECK(rep.worst_point == 4);
    CHECK(rep.points[4].abs_err > 1e-9);
    CHECK(rep.points[4].last_term > 0.0);
}

TEST_CASE("unattainable tolerances fail honestly") {
    CheckConfig cfg;
    cfg.abs_tol = 1e-30;
    cfg.rel_tol = 1e-30;
    // arcsin-sq's two routes land a few ulps apart at every grid point, so
    // nothing can satisfy tolerances below one ulp.  (An exactly summable
    // identity like geometric would legitimately pass: both sides round to
    // the same double.)
    const CheckReport rep = check_identity(catalog(), "arcsin-sq", cfg);
    CHECK(!rep.pass);
    CHECK(rep.points[static_cast<size_t>(rep.worst_point)].abs_err > 0.0);
}

TEST_CASE("out-of-domain points are skipped with a reason") {
    const CheckReport rep = check_identity(catalog(), "tree-k0", CheckConfig{});
    CHECK(rep.pass); // skips never fail a report
    int skips = 0;
    for (const auto& p : rep.points) {
        if (p.skipped) {
            ++skips;
            CHECK(!p.skip_reason.empty());
            CHECK(p.z < 0.0); // negative w has no tree preimage
        }
    }
    CHECK(skips == 2);
    CHECK(rep.points.size() == 5);
}

TEST_CASE("unknown ids throw") {
    CHECK_THROWS_AS(check_identity(catalog(), "nope", CheckConfig{}), UnknownIdentity);
    CHECK_THROWS_AS(quadrature_check("nope", CheckConfig{}), UnknownIdentity);
}

TEST_CASE("quadrature families are wired and pass") {
    const auto ids = quadrature_check_ids();
    CHECK(ids.size() >= 25);
    CHECK(std::find(ids.begin(), ids.end(), "quad-gamma") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "quad-elliptic-k") != ids.end());

    const CheckReport rep = quadrature_check("quad-gamma", CheckConfig{});
    CHECK(rep.pass);
    CHECK(rep.points.size() == 4);
}

TEST_CASE("pinned integral cross-checks") {
    const QuadratureOptions opt{1e-12, 48};
    // Gamma(2.5) against its Euler integral
    const double g25 = integrate_power_weighted_to_infinity(
                           [](double t) { return std::exp(-t); }, 2.5, opt)
                           .value;
    CHECK(std::fabs(genfun::gamma(2.5) - g25) <= 1e-10);
    // erf(1) against (2/sqrt(pi)) integral_0^1 e^{-t^2}
    const double e1 = 2.0 / std::sqrt(std::numbers::pi) *
                      integrate([](double t) { return std::exp(-t * t); }, 0.0, 1.0, opt)
                          .value;
    CHECK(std::fabs(genfun::erf(1.0) - e1) <= 1e-11);
    // g_2(1/2) against (1/Gamma(2)) integral_0^inf t/(2 e^t - 1)
    const double li = integrate_power_weighted_to_infinity(
                          [](double t) { return 1.0 / (2.0 * std::exp(t) - 1.0); }, 2.0, opt)
                          .value;
    CHECK(std::fabs(polylog(2.0, 0.5) - li) <= 1e-9);
}

TEST_CASE("report serialization round-trips and is deterministic") {
    SuiteReport suite;
    suite.config = CheckConfig{};
    suite.timestamp = "2026-08-19T00:00:00Z";
    suite.checks.push_back(check_identity(catalog(), "geometric", suite.config));
    suite.checks.push_back(check_identity(catalog(), "tree-k0", suite.config));
    suite.checks.push_back(quadrature_check("quad-erf", suite.config));
    suite.total = 3;
    suite.passed = 3;
    suite.failed = 0;

    const std::string json = to_json(suite);
    CHECK(json == to_json(suite)); // deterministic
    CHECK(json.find("\"timestamp\": \"2026-08-19T00:00:00Z\",\n") != std::string::npos);
    CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(json.find("\"skip_reason\"") != std::string::npos);

    const SuiteReport back = suite_report_from_json(json);
    CHECK(back == suite);

    // single-report form parses as JSON too (nested object shape)
    const std::string one = to_json(suite.checks[0]);
    CHECK(one.find("\"id\": \"geometric\"") != std::string::npos);
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS(suite_report_from_json("{ not json"));
}
