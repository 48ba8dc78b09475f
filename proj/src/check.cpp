#include "genfun/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"

#include "genfun/errors.hpp"
#include "genfun/quadrature.hpp"
#include "genfun/special.hpp"

namespace genfun {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// badness < 1 exactly when the point passes under the or-rule
double badness(const CheckPoint& p, const CheckConfig& cfg) {
    return std::min(p.abs_err / cfg.abs_tol, p.rel_err / cfg.rel_tol);
}

void finish_report(CheckReport& rep, const CheckConfig& cfg) {
    double worst = -1.0;
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
        const CheckPoint& p = rep.points[i];
        if (p.skipped)
            continue;
        const double b = badness(p, cfg);
        if (b > 1.0)
            rep.pass = false;
        if (b > worst) {
            worst = b;
            rep.worst_point = static_cast<int>(i);
        }
    }
}

CheckPoint compare_point(double z, double series_value, double closed_value) {
    CheckPoint p;
    p.z = z;
    p.series_value = series_value;
    p.closed_value = closed_value;
    p.abs_err = std::fabs(series_value - closed_value);
    // keep rel_err finite even against a zero reference
    p.rel_err = p.abs_err / std::max(std::fabs(closed_value), 2.2250738585072014e-308);
    return p;
}

// ---------------------------------------------------------------------------
// quadrature cross-check families
// ---------------------------------------------------------------------------

struct QuadFamily {
    std::string id;
    std::vector<double> xs;
    std::function<double(double)> series_side;
    std::function<double(double, const QuadratureOptions&)> integral_side;
};

double bessel_j_integral(double nu, double z, const QuadratureOptions& opt) {
    // A&S 9.1.20
    const double pref = std::pow(0.5 * z, nu) / (std::sqrt(kPi) * gamma(nu + 0.5));
    const double val = integrate(
                           [nu, z](double th) {
                               return std::cos(z * std::cos(th)) *
                                      std::pow(std::sin(th), 2.0 * nu);
                           },
                           0.0, kPi, opt)
                           .value;
    return pref * val;
}

double bessel_i_integral(double nu, double z, const QuadratureOptions& opt) {
    // A&S 9.6.18
    const double pref = std::pow(0.5 * z, nu) / (std::sqrt(kPi) * gamma(nu + 0.5));
    const double val = integrate(
                           [nu, z](double th) {
                               return std::exp(z * std::cos(th)) *
                                      std::pow(std::sin(th), 2.0 * nu);
                           },
                           0.0, kPi, opt)
                           .value;
    return pref * val;
}

std::vector<QuadFamily> make_quad_families() {
    std::vector<QuadFamily> fams;

    // Gamma(s) vs its Euler integral (A&S 6.1.1)
    fams.push_back({"quad-gamma",
                    {0.5, 1.5, 2.5, 4.0},
                    [](double s) { return gamma(s); },
                    [](double s, const QuadratureOptions& opt) {
                        return integrate_power_weighted_to_infinity(
                                   [](double t) { return std::exp(-t); }, s, opt)
                            .value;
                    }});

    // gamma*(a, x) vs x^{-a}/Gamma(a) integral_0^x t^{a-1} e^{-t} (A&S 6.5.4)
    for (double a : {0.5, 1.0, 2.5}) {
        std::ostringstream id;
        id << "quad-gamma-star-a" << a;
        fams.push_back({id.str(),
                        {0.1, 1.0, 3.0},
                        [a](double x) { return incomplete_gamma_star(a, x); },
                        [a](double x, const QuadratureOptions& opt) {
                            const double lower =
                                integrate_power_weighted(
                                    [](double t) { return std::exp(-t); }, a, x, opt)
                                    .value;
                            return std::exp(-a * std::log(x)) * lower / gamma(a);
                        }});
    }

    // Gamma(a, x) vs integral_x^inf t^{a-1} e^{-t} (A&S 6.5.2)
    for (double a : {0.5, 1.0, 2.5}) {
        std::ostringstream id;
        id << "quad-upper-gamma-a" << a;
        fams.push_back({id.str(),
                        {0.1, 1.0, 3.0},
                        [a](double x) { return upper_gamma(a, x); },
                        [a](double x, const QuadratureOptions& opt) {
                            return integrate_to_infinity(
                                       [a](double t) {
                                           return std::pow(t, a - 1.0) * std::exp(-t);
                                       },
                                       x, opt)
                                .value;
                        }});
    }

    // erf vs (2/sqrt(pi)) integral_0^x e^{-t^2} (A&S 7.1.1)
    fams.push_back({"quad-erf",
                    {0.25, 0.5, 1.0, 2.0, 3.0},
                    [](double x) { return erf(x); },
                    [](double x, const QuadratureOptions& opt) {
                        return 2.0 / std::sqrt(kPi) *
                               integrate([](double t) { return std::exp(-t * t); }, 0.0, x, opt)
                                   .value;
                    }});

    // Ei(x) vs gamma + ln x + integral_0^x (e^t - 1)/t (A&S 5.1.10)
    fams.push_back({"quad-ei",
                    {0.5, 1.0, 2.0, 4.0},
                    [](double x) { return expint_ei(x); },
                    [](double x, const QuadratureOptions& opt) {
                        return euler_gamma() + std::log(x) +
                               integrate([](double t) { return std::expm1(t) / t; }, 0.0, x, opt)
                                   .value;
                    }});

    // E1(x) vs integral_x^inf e^{-t}/t (A&S 5.1.1)
    fams.push_back({"quad-e1",
                    {0.5, 1.0, 2.0, 5.0},
                    [](double x) { return expint_e1(x); },
                    [](double x, const QuadratureOptions& opt) {
                        return integrate_to_infinity(
                                   [](double t) { return std::exp(-t) / t; }, x, opt)
                            .value;
                    }});

    // E_n(x) vs integral_1^inf e^{-xt} t^{-n} (A&S 5.1.1)
    for (int n : {2, 5}) {
        fams.push_back({"quad-en-n" + std::to_string(n),
                        {0.5, 1.0, 2.0},
                        [n](double x) { return expint_en(n, x); },
                        [n](double x, const QuadratureOptions& opt) {
                            return integrate_to_infinity(
                                       [n, x](double t) {
                                           return std::exp(-x * t) * std::pow(t, -double(n));
                                       },
                                       1.0, opt)
                                .value;
                        }});
    }

    // Si / Ci / Shi / Chi vs their defining integrals (A&S 5.2)
    fams.push_back({"quad-si",
                    {0.5, 1.0, 2.0, 5.0},
                    [](double x) { return sin_integral(x); },
                    [](double x, const QuadratureOptions& opt) {
                        return integrate([](double t) { return std::sin(t) / t; }, 0.0, x, opt)
                            .value;
                    }});
    fams.push_back({"quad-ci",
                    {0.5, 1.0, 2.0, 5.0},
                    [](double x) { return cos_integral(x); },
                    [](double x, const QuadratureOptions& opt) {
                        const double core =
                            integrate(
                                [](double t) {
                                    const double s = std::sin(0.5 * t);
                                    return -2.0 * s * s / t;
                                },
                                0.0, x, opt)
                                .value;
                        return euler_gamma() + std::log(x) + core;
                    }});
    fams.push_back({"quad-shi",
                    {0.5, 1.0, 2.0},
                    [](double x) { return sinh_integral(x); },
                    [](double x, const QuadratureOptions& opt) {
                        return integrate([](double t) { return std::sinh(t) / t; }, 0.0, x, opt)
                            .value;
                    }});
    fams.push_back({"quad-chi",
                    {0.5, 1.0, 2.0},
                    [](double x) { return cosh_integral(x); },
                    [](double x, const QuadratureOptions& opt) {
                        const double core =
                            integrate(
                                [](double t) {
                                    const double s = std::sinh(0.5 * t);
                                    return 2.0 * s * s / t;
                                },
                                0.0, x, opt)
                                .value;
                        return euler_gamma() + std::log(x) + core;
                    }});

    // Bessel J_nu / I_nu vs the Poisson-type integrals, nu in {0, 1/2, 1, 2}
    const struct {
        const char* tag;
        double nu;
    } nus[] = {{"0", 0.0}, {"half", 0.5}, {"1", 1.0}, {"2", 2.0}};
    for (const auto& v : nus) {
        const double nu = v.nu;
        fams.push_back({std::string("quad-bessel-j-nu") + v.tag,
                        {0.5, 2.0, 5.0},
                        [nu](double z) { return bessel_j(nu, z); },
                        [nu](double z, const QuadratureOptions& opt) {
                            return bessel_j_integral(nu, z, opt);
                        }});
        fams.push_back({std::string("quad-bessel-i-nu") + v.tag,
                        {0.5, 2.0},
                        [nu](double z) { return bessel_i(nu, z); },
                        [nu](double z, const QuadratureOptions& opt) {
                            return bessel_i_integral(nu, z, opt);
                        }});
    }

    // K(m), E(m) vs the theta integrals (A&S 17.3.1, 17.3.2)
    fams.push_back({"quad-elliptic-k",
                    {0.1, 0.5, 0.9},
                    [](double m) { return elliptic_k(m); },
                    [](double m, const QuadratureOptions& opt) {
                        return integrate(
                                   [m](double th) {
                                       const double s = std::sin(th);
                                       return 1.0 / std::sqrt(1.0 - m * s * s);
                                   },
                                   0.0, 0.5 * kPi, opt)
                            .value;
                    }});
    fams.push_back({"quad-elliptic-e",
                    {0.1, 0.5, 0.9},
                    [](double m) { return elliptic_e(m); },
                    [](double m, const QuadratureOptions& opt) {
                        return integrate(
                                   [m](double th) {
                                       const double s = std::sin(th);
                                       return std::sqrt(1.0 - m * s * s);
                                   },
                                   0.0, 0.5 * kPi, opt)
                            .value;
                    }});

    // zeta(s) vs (1/Gamma(s)) integral t^{s-1}/(e^t - 1) (A&S 23.2.7)
    fams.push_back({"quad-zeta",
                    {1.5, 2.0, 3.0},
                    [](double s) { return zeta(s); },
                    [](double s, const QuadratureOptions& opt) {
                        // t^{s-1}/(e^t-1) = t^{s-2} * (t/(e^t-1)), regular at 0
                        const double integral =
                            integrate_power_weighted_to_infinity(
                                [](double t) { return t / std::expm1(t); }, s - 1.0, opt)
                                .value;
                        return integral / gamma(s);
                    }});

    // g_s(z) vs (1/Gamma(s)) integral t^{s-1}/(z^{-1} e^t - 1)
    for (double s : {1.5, 2.0, 3.0}) {
        std::ostringstream id;
        id << "quad-polylog-s" << s;
        fams.push_back({id.str(),
                        {0.3, 0.5, 0.7, 0.9},
                        [s](double z) { return polylog(s, z); },
                        [s](double z, const QuadratureOptions& opt) {
                            const double integral =
                                integrate_power_weighted_to_infinity(
                                    [z](double t) { return z / (std::exp(t) - z); }, s, opt)
                                    .value;
                            return integral / gamma(s);
                        }});
    }

    // C(2n,n)/4^n vs (2/pi) integral_0^{pi/2} sin^{2n} (A&S 6.1.49 row)
    fams.push_back({"quad-central-binomial",
                    {0.0, 1.0, 5.0, 10.0},
                    [](double n) { return central_binomial(static_cast<unsigned>(n)); },
                    [](double n, const QuadratureOptions& opt) {
                        return 2.0 / kPi *
                               integrate(
                                   [n](double th) {
                                       return std::pow(std::sin(th), 2.0 * n);
                                   },
                                   0.0, 0.5 * kPi, opt)
                                   .value;
                    }});

    return fams;
}

const std::vector<QuadFamily>& quad_families() {
    static const std::vector<QuadFamily> fams = make_quad_families();
    return fams;
}

} // namespace

void validate(const CheckConfig& config) {
    if (config.terms < 8)
        throw DomainError("config.terms must be >= 8");
    if (!(config.abs_tol > 0.0) || !(config.rel_tol > 0.0) || !(config.quadrature_tol > 0.0))
        throw DomainError("config tolerances must be > 0");
}

CheckConfig parse_config(const std::string& text) {
    CheckConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty())
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw DomainError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        try {
            if (key == "terms")
                cfg.terms = std::stoi(value);
            else if (key == "abs_tol")
                cfg.abs_tol = std::stod(value);
            else if (key == "rel_tol")
                cfg.rel_tol = std::stod(value);
            else if (key == "quadrature_tol")
                cfg.quadrature_tol = std::stod(value);
            else if (key == "sample_policy")
                cfg.sample_policy = value;
            else
                throw DomainError("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw DomainError("config line " + std::to_string(lineno) + ": bad value for " + key);
        } catch (const std::out_of_range&) {
            throw DomainError("config line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    return cfg;
}

CheckReport check_identity(const Catalog& catalog, const std::string& id,
                           const CheckConfig& config) {
    validate(config);
    const IdentityEntry& e = catalog.entry(id);

    std::vector<double> coeff(static_cast<std::size_t>(config.terms));
    for (int n = 0; n < config.terms; ++n)
        coeff[static_cast<std::size_t>(n)] = e.coefficient(n).to_double();

    CheckReport rep;
    rep.id = id;
    for (double z : catalog.sample_points(id)) {
        double closed = 0.0;
        try {
            closed = catalog.closed_form(id, z);
        } catch (const OutOfDomain& ex) {
            CheckPoint p;
            p.z = z;
            p.skipped = true;
            p.skip_reason = ex.what();
            rep.points.push_back(std::move(p));
            continue;
        }
        // long double keeps the power recurrence honest out to z^199 even
        // for |z| up to ~2 pi (double would overflow first for big z, and
        // lose a few digits of the tail otherwise)
        long double sum = 0.0L;
        long double zn = 1.0L;
        long double term = 0.0L;
        for (int n = 0; n < config.terms; ++n) {
            term = static_cast<long double>(coeff[static_cast<std::size_t>(n)]) * zn;
            sum += term;
            zn *= static_cast<long double>(z);
        }
        CheckPoint p = compare_point(z, static_cast<double>(sum), closed);
        p.last_term = std::fabs(static_cast<double>(term));
        rep.points.push_back(p);
    }
    finish_report(rep, config);
    return rep;
}

std::vector<std::string> quadrature_check_ids() {
    std::vector<std::string> ids;
    ids.reserve(quad_families().size());
    for (const auto& f : quad_families())
        ids.push_back(f.id);
    return ids;
}

CheckReport quadrature_check(const std::string& fn_id, const CheckConfig& config) {
    validate(config);
    const QuadFamily* fam = nullptr;
    for (const auto& f : quad_families())
        if (f.id == fn_id)
            fam = &f;
    if (fam == nullptr)
        throw UnknownIdentity("no quadrature check named '" + fn_id + "'");

    const QuadratureOptions opt{config.quadrature_tol, 48};
    CheckReport rep;
    rep.id = fn_id;
    for (double x : fam->xs) {
        const double lhs = fam->series_side(x);
        const double rhs = fam->integral_side(x, opt);
        rep.points.push_back(compare_point(x, lhs, rhs));
    }
    finish_report(rep, config);
    return rep;
}

SuiteReport run_suite(const Catalog& catalog, const CheckConfig& config) {
    validate(config);
    SuiteReport suite;
    suite.config = config;

    for (const std::string& id : catalog.list_identities())
        suite.checks.push_back(check_identity(catalog, id, config));
    for (const auto& fam : quad_families())
        suite.checks.push_back(quadrature_check(fam.id, config));

    suite.total = static_cast<int>(suite.checks.size());
    for (const auto& rep : suite.checks)
        (rep.pass ? suite.passed : suite.failed) += 1;

    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    suite.timestamp = buf;
    return suite;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned char>(ch));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

void point_to_json(std::ostream& os, const CheckPoint& p) {
    os << "{ \"z\": " << fmt(p.z) << ", \"series_value\": " << fmt(p.series_value)
       << ", \"closed_value\": " << fmt(p.closed_value) << ", \"abs_err\": " << fmt(p.abs_err)
       << ", \"rel_err\": " << fmt(p.rel_err) << ", \"last_term\": " << fmt(p.last_term)
       << ", \"skipped\": " << (p.skipped ? "true" : "false") << ", \"skip_reason\": \""
       << json_escape(p.skip_reason) << "\" }";
}

void report_to_json(std::ostream& os, const CheckReport& r, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    const std::string pad2(static_cast<std::size_t>(indent) + 2, ' ');
    const std::string pad4(static_cast<std::size_t>(indent) + 4, ' ');
    os << pad << "{\n";
    os << pad2 << "\"id\": \"" << json_escape(r.id) << "\",\n";
    os << pad2 << "\"verdict\": \"" << (r.pass ? "pass" : "fail") << "\",\n";
    os << pad2 << "\"worst_point\": " << r.worst_point << ",\n";
    os << pad2 << "\"points\": [\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        os << pad4;
        point_to_json(os, r.points[i]);
        os << (i + 1 < r.points.size() ? ",\n" : "\n");
    }
    os << pad2 << "]\n";
    os << pad << "}";
}

} // namespace

std::string to_json(const CheckReport& report, int indent) {
    std::ostringstream os;
    report_to_json(os, report, indent);
    os << "\n";
    return os.str();
}

std::string to_json(const SuiteReport& report) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"timestamp\": \"" << json_escape(report.timestamp) << "\",\n";
    os << "  \"config\": {\n";
    os << "    \"terms\": " << report.config.terms << ",\n";
    os << "    \"abs_tol\": " << fmt(report.config.abs_tol) << ",\n";
    os << "    \"rel_tol\": " << fmt(report.config.rel_tol) << ",\n";
    os << "    \"quadrature_tol\": " << fmt(report.config.quadrature_tol) << ",\n";
    os << "    \"sample_policy\": \"" << json_escape(report.config.sample_policy) << "\"\n";
    os << "  },\n";
    os << "  \"totals\": {\n";
    os << "    \"checks\": " << report.total << ",\n";
    os << "    \"passed\": " << report.passed << ",\n";
    os << "    \"failed\": " << report.failed << "\n";
    os << "  },\n";
    os << "  \"checks\": [\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        report_to_json(os, report.checks[i], 4);
        os << (i + 1 < report.checks.size() ? ",\n" : "\n");
    }
    os << "  ]\n";
    os << "}\n";
    return os.str();
}

SuiteReport suite_report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    SuiteReport s;
    s.timestamp = j.at("timestamp").get<std::string>();
    const auto& c = j.at("config");
    s.config.terms = c.at("terms").get<int>();
    s.config.abs_tol = c.at("abs_tol").get<double>();
    s.config.rel_tol = c.at("rel_tol").get<double>();
    s.config.quadrature_tol = c.at("quadrature_tol").get<double>();
    s.config.sample_policy = c.at("sample_policy").get<std::string>();
    const auto& t = j.at("totals");
    s.total = t.at("checks").get<int>();
    s.passed = t.at("passed").get<int>();
    s.failed = t.at("failed").get<int>();
    for (const auto& rc : j.at("checks")) {
        CheckReport r;
        r.id = rc.at("id").get<std::string>();
        r.pass = rc.at("verdict").get<std::string>() == "pass";
        r.worst_point = rc.at("worst_point").get<int>();
        for (const auto& pc : rc.at("points")) {
            CheckPoint p;
            p.z = pc.at("z").get<double>();
            p.series_value = pc.at("series_value").get<double>();
            p.closed_value = pc.at("closed_value").get<double>();
            p.abs_err = pc.at("abs_err").get<double>();
            p.rel_err = pc.at("rel_err").get<double>();
            p.last_term = pc.at("last_term").get<double>();
            p.skipped = pc.at("skipped").get<bool>();
            p.skip_reason = pc.at("skip_reason").get<std::string>();
            r.points.push_back(std::move(p));
        }
        s.checks.push_back(std::move(r));
    }
    return s;
}

} // namespace genfun
