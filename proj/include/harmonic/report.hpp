#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "harmonic/exact_constants.hpp"
#include "harmonic/kernel_embedding.hpp"

namespace harmonic {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "harmonic-embed/1";

/// One verification outcome. `value` and `expected` are numbers, exact
/// rationals rendered as "p/q", or small structured values such as a
/// signature triple. A tolerance of 0 means exact comparison.
struct Check {
    std::string name;
    bool passed = false;
    json value;
    json expected;
    double tolerance = 0.0;
};

struct Report {
    std::string command;
    json params = json::object();
    json payload = json::object();  // command-specific results (constants, tables, analyses)
    std::vector<Check> checks;
    double runtime_ms = 0.0;

    [[nodiscard]] bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    void add(std::string name, bool passed, json value, json expected, double tolerance = 0.0)
    {
        checks.push_back({std::move(name), passed, std::move(value), std::move(expected), tolerance});
    }

    /// |value - expected| <= tolerance.
    void add_close(std::string name, double value, double expected, double tolerance)
    {
        const bool ok = std::isfinite(value) && std::abs(value - expected) <= tolerance;
        add(std::move(name), ok, value, expected, tolerance);
    }

    /// value <= bound, reported with expected = bound.
    void add_at_most(std::string name, double value, double bound)
    {
        add(std::move(name), std::isfinite(value) && value <= bound, value, bound, bound);
    }

    void add_exact(std::string name, const Rational& value, const Rational& expected)
    {
        add(std::move(name), value == expected, value.to_string(), expected.to_string());
    }
};

inline json to_json(const Rational& r) { return r.to_string(); }

inline json to_json(const SpectralConstants& s)
{
    return json{{"lambda", s.lambda.to_string()},
                {"c", s.c.to_string()},
                {"c_lambda", s.c_lambda.to_string()},
                {"b", s.b.to_string()}};
}

inline json to_json(const DensityExponents& e)
{
    return json{{"log2_prefactor", e.log2_prefactor.to_string()},
                {"sinh_half_exp", e.sinh_half_exp.to_string()},
                {"cosh_half_exp", e.cosh_half_exp.to_string()}};
}

inline json to_json(const ConsistencyChecks& c)
{
    return json{{"case1_c_zero", c.case1_c_zero},
                {"positivity_identity", c.positivity_identity},
                {"ledger_oracle", c.ledger_oracle}};
}

inline json to_json(const Signature& s) { return json::array({s.n_plus, s.n_minus, s.n_zero}); }

/// {"m", "c", "eigenvalues", "rank", "signature", "tolerance"}.
inline json to_json(const GramAnalysis& g)
{
    return json{{"m", g.matrix.size()},
                {"c", g.c},
                {"eigenvalues", g.eigenvalues},
                {"rank", g.rank},
                {"signature", to_json(g.signature)},
                {"tolerance", g.tolerance}};
}

inline json to_json(const Check& c)
{
    return json{{"name", c.name},
                {"status", c.passed ? "pass" : "fail"},
                {"value", c.value},
                {"expected", c.expected},
                {"tolerance", c.tolerance}};
}

/// runtime_ms is the last member so tools can strip it before hashing.
inline json to_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    json out{{"schema", kReportSchema},
             {"command", r.command},
             {"params", r.params}};
    for (const auto& [key, value] : r.payload.items()) out[key] = value;
    out["checks"] = std::move(checks);
    out["status"] = r.passed() ? "pass" : "fail";
    out["runtime_ms"] = r.runtime_ms;
    return out;
}

namespace detail {

inline std::string scalar_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
        // shortest form that reads back to the same double
        const double x = v.get<double>();
        char buf[32];
        for (int precision = 1; precision <= 17; ++precision) {
            std::snprintf(buf, sizeof buf, "%.*g", precision, x);
            if (std::strtod(buf, nullptr) == x) break;
        }
        return buf;
    }
    return v.dump();
}

inline std::string csv_field(std::string s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

} // namespace detail

inline void write_report_csv(std::ostream& os, const Report& r)
{
    os << "name,status,value,expected,tolerance\n";
    for (const auto& c : r.checks) {
        os << detail::csv_field(c.name) << ',' << (c.passed ? "pass" : "fail") << ','
           << detail::csv_field(detail::scalar_text(c.value)) << ','
           << detail::csv_field(detail::scalar_text(c.expected)) << ','
           << detail::scalar_text(json(c.tolerance)) << '\n';
    }
}

inline void write_report_text(std::ostream& os, const Report& r)
{
    os << "harmonic-embed " << r.command << '\n';
    for (const auto& c : r.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name << "  value=" << detail::scalar_text(c.value)
           << "  expected=" << detail::scalar_text(c.expected)
           << "  tol=" << detail::scalar_text(json(c.tolerance)) << '\n';
    }
    os << "overall: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    char buf[48];
    std::snprintf(buf, sizeof buf, "runtime_ms: %.3f\n", r.runtime_ms);
    os << buf;
}

} // namespace harmonic
