#pragma once

#include <string>
#include <vector>

#include "genfun/catalog.hpp"

namespace genfun {

struct CheckConfig {
    int terms = 200;            // partial-sum order (coefficients 0..terms-1)
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double quadrature_tol = 1e-11;
    std::string sample_policy = "{-0.5, -0.1, 0.1, 0.5, 0.8} x radius (scale capped at 5)";
    bool operator==(const CheckConfig&) const = default;
};

// DomainError unless tolerances > 0 and terms >= 8.
void validate(const CheckConfig& config);

// Parses "key = value" lines (#-comments and blank lines ignored); keys are
// the CheckConfig field names.  DomainError on unknown keys or bad values.
CheckConfig parse_config(const std::string& text);

struct CheckPoint {
    double z = 0.0;
    double series_value = 0.0;
    double closed_value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double last_term = 0.0; // |final partial-sum term|, convergence indicator only
    bool skipped = false;
    std::string skip_reason;
    bool operator==(const CheckPoint&) const = default;
};

struct CheckReport {
    std::string id;
    std::vector<CheckPoint> points;
    bool pass = true;
    // Index of the point with the largest min(abs_err/abs_tol,
    // rel_err/rel_tol); -1 when every point was skipped.
    int worst_point = -1;
    bool operator==(const CheckReport&) const = default;
};

struct SuiteReport {
    CheckConfig config;
    std::vector<CheckReport> checks;
    int total = 0;
    int passed = 0;
    int failed = 0;
    std::string timestamp; // ISO-8601 UTC; excluded from determinism claims
    bool operator==(const SuiteReport&) const = default;
};

// Sums the first config.terms coefficients of the identity at each sample
// point and compares against the closed form.  A point passes when
// abs_err <= abs_tol or rel_err <= rel_tol; out-of-domain closed forms
// become per-point skips with the reason recorded.
CheckReport check_identity(const Catalog& catalog, const std::string& id,
                           const CheckConfig& config);

// Cross-checks of special-fn values against adaptive quadrature of the
// defining integrals, grouped into named families.
std::vector<std::string> quadrature_check_ids();
CheckReport quadrature_check(const std::string& fn_id, const CheckConfig& config);

// Every catalog check followed by every quadrature check.
SuiteReport run_suite(const Catalog& catalog, const CheckConfig& config);

// Deterministic serialization: fixed key order, 17 significant digits; the
// timestamp sits on its own line so diffs can ignore it.
std::string to_json(const CheckReport& report, int indent = 0);
std::string to_json(const SuiteReport& report);
SuiteReport suite_report_from_json(const std::string& text);

} // namespace genfun
