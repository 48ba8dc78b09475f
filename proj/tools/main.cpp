// genfun: evaluate, inspect, and verify the generating-function catalog.
//
//   genfun eval <fn> [args...]      evaluate a special function at a point
//   genfun coeffs <id> [--n K]      exact series coefficients 0..K
//   genfun check <id> [options]     verify one identity, JSON report
//   genfun suite [options]          run every check, JSON suite report
//   genfun table                    list the catalog
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage/config error.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "genfun/catalog.hpp"
#include "genfun/check.hpp"
#include "genfun/errors.hpp"
#include "genfun/lagrange.hpp"
#include "genfun/special.hpp"

namespace {

struct EvalFn {
    int arity;
    std::function<double(const std::vector<double>&)> fn;
};

const std::map<std::string, EvalFn>& eval_functions() {
    using V = std::vector<double>;
    static const std::map<std::string, EvalFn> fns = {
        {"gamma", {1, [](const V& a) { return genfun::gamma(a[0]); }}},
        {"ln-gamma", {1, [](const V& a) { return genfun::ln_gamma(a[0]); }}},
        {"euler-gamma", {0, [](const V&) { return genfun::euler_gamma(); }}},
        {"gamma-star", {2, [](const V& a) { return genfun::incomplete_gamma_star(a[0], a[1]); }}},
        {"upper-gamma", {2, [](const V& a) { return genfun::upper_gamma(a[0], a[1]); }}},
        {"erf", {1, [](const V& a) { return genfun::erf(a[0]); }}},
        {"ei", {1, [](const V& a) { return genfun::expint_ei(a[0]); }}},
        {"e1", {1, [](const V& a) { return genfun::expint_e1(a[0]); }}},
        {"en", {2, [](const V& a) { return genfun::expint_en(static_cast<int>(a[0]), a[1]); }}},
        {"si", {1, [](const V& a) { return genfun::sin_integral(a[0]); }}},
        {"ci", {1, [](const V& a) { return genfun::cos_integral(a[0]); }}},
        {"shi", {1, [](const V& a) { return genfun::sinh_integral(a[0]); }}},
        {"chi", {1, [](const V& a) { return genfun::cosh_integral(a[0]); }}},
        {"bessel-j", {2, [](const V& a) { return genfun::bessel_j(a[0], a[1]); }}},
        {"bessel-i", {2, [](const V& a) { return genfun::bessel_i(a[0], a[1]); }}},
        {"elliptic-k", {1, [](const V& a) { return genfun::elliptic_k(a[0]); }}},
        {"elliptic-e", {1, [](const V& a) { return genfun::elliptic_e(a[0]); }}},
        {"zeta", {1, [](const V& a) { return genfun::zeta(a[0]); }}},
        {"polylog", {2, [](const V& a) { return genfun::polylog(a[0], a[1]); }}},
        {"central-binomial",
         {1, [](const V& a) { return genfun::central_binomial(static_cast<unsigned>(a[0])); }}},
        {"central-binomial-asymptotic",
         {2,
          [](const V& a) {
              return genfun::central_binomial_asymptotic(static_cast<unsigned>(a[0]),
                                                         static_cast<int>(a[1]));
          }}},
        {"stirling-ln-gamma",
         {2, [](const V& a) { return genfun::stirling_ln_gamma(a[0], static_cast<int>(a[1])); }}},
        {"tree-sum", {2, [](const V& a) { return genfun::tree_sum(static_cast<int>(a[0]), a[1]); }}},
        {"tree-x-from-w", {1, [](const V& a) { return genfun::tree_x_from_w(a[0]); }}},
        {"bethe", {2, [](const V& a) { return genfun::bethe_gf(a[0], a[1]); }}},
        {"central-shifted",
         {2, [](const V& a) { return genfun::central_shifted(static_cast<int>(a[0]), a[1]); }}},
    };
    return fns;
}

int cmd_eval(const std::string& fn, const std::vector<double>& args) {
    const auto it = eval_functions().find(fn);
    if (it == eval_functions().end()) {
        std::cerr << "unknown function '" << fn << "'; available:";
        for (const auto& [name, _] : eval_functions())
            std::cerr << " " << name;
        std::cerr << "\n";
        return 2;
    }
    if (static_cast<int>(args.size()) != it->second.arity) {
        std::cerr << "'" << fn << "' takes " << it->second.arity << " argument(s), got "
                  << args.size() << "\n";
        return 2;
    }
    std::printf("%.16g\n", it->second.fn(args));
    return 0;
}

int cmd_coeffs(const genfun::Catalog& catalog, const std::string& id, int k) {
    if (k < 0) {
        std::cerr << "--n must be >= 0\n";
        return 2;
    }
    std::string sep;
    for (int n = 0; n <= k; ++n) {
        std::cout << sep << catalog.coefficient(id, n).str();
        sep = " ";
    }
    std::cout << "\n";
    return 0;
}

int cmd_check(const genfun::Catalog& catalog, const std::string& id,
              const genfun::CheckConfig& config) {
    genfun::CheckReport rep;
    if (catalog.contains(id)) {
        rep = genfun::check_identity(catalog, id, config);
    } else {
        rep = genfun::quadrature_check(id, config); // throws UnknownIdentity if absent
    }
    std::cout << genfun::to_json(rep);
    return rep.pass ? 0 : 1;
}

int cmd_suite(const genfun::Catalog& catalog, const std::string& config_path,
              const std::string& out_path) {
    genfun::CheckConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config file '" << config_path << "'\n";
            return 2;
        }
        std::ostringstream text;
        text << in.rdbuf();
        config = genfun::parse_config(text.str());
    }
    genfun::validate(config);

    const genfun::SuiteReport suite = genfun::run_suite(catalog, config);
    const std::string json = genfun::to_json(suite);
    if (out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open output file '" << out_path << "'\n";
            return 2;
        }
        out << json;
    }
    std::cerr << suite.passed << "/" << suite.total << " checks passed\n";
    return suite.failed == 0 ? 0 : 1;
}

int cmd_table(const genfun::Catalog& catalog) {
    for (const std::string& id : catalog.list_identities()) {
        const genfun::IdentityEntry& e = catalog.entry(id);
        char radius[32];
        if (e.domain.radius == std::numeric_limits<double>::infinity())
            std::snprintf(radius, sizeof radius, "%8s", "inf");
        else
            std::snprintf(radius, sizeof radius, "%8.6g", e.domain.radius);
        std::printf("%-22s %-28s %s  %s\n", id.c_str(), e.anchor.c_str(), radius,
                    e.description.c_str());
    }
    std::printf("%zu identities; quadrature checks:", catalog.size());
    for (const std::string& id : genfun::quadrature_check_ids())
        std::printf(" %s", id.c_str());
    std::printf("\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generating-function identity workbench"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate a special function at a point");
    std::string eval_fn;
    std::vector<double> eval_args;
    eval->add_option("fn", eval_fn, "function name (see 'eval --help')")->required();
    eval->add_option("args", eval_args, "numeric arguments");

    auto* coeffs = app.add_subcommand("coeffs", "print exact series coefficients 0..K");
    std::string coeffs_id;
    int coeffs_n = 10;
    coeffs->add_option("id", coeffs_id, "catalog identity")->required();
    coeffs->add_option("--n", coeffs_n, "highest index to print");

    auto* check = app.add_subcommand("check", "verify one identity against its closed form");
    std::string check_id;
    genfun::CheckConfig check_config;
    double check_tol = 0.0;
    check->add_option("id", check_id, "catalog identity or quadrature check")->required();
    check->add_option("--terms", check_config.terms, "partial-sum length");
    check->add_option("--tol", check_tol, "set abs_tol and rel_tol together");

    auto* suite = app.add_subcommand("suite", "run every identity and quadrature check");
    std::string suite_config_path;
    std::string suite_out_path;
    suite->add_option("--config", suite_config_path, "key = value config file");
    suite->add_option("--out", suite_out_path, "write the JSON report here instead of stdout");

    auto* table = app.add_subcommand("table", "list catalog identities and anchors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const genfun::Catalog catalog;
        if (eval->parsed())
            return cmd_eval(eval_fn, eval_args);
        if (coeffs->parsed())
            return cmd_coeffs(catalog, coeffs_id, coeffs_n);
        if (check->parsed()) {
            if (check_tol > 0.0) {
                check_config.abs_tol = check_tol;
                check_config.rel_tol = check_tol;
            }
            return cmd_check(catalog, check_id, check_config);
        }
        if (suite->parsed())
            return cmd_suite(catalog, suite_config_path, suite_out_path);
        if (table->parsed())
            return cmd_table(catalog);
    } catch (const genfun::UnknownIdentity& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const genfun::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
