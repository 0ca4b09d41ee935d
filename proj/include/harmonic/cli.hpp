#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmonic/density_ode.hpp"
#include "harmonic/exact_constants.hpp"
#include "harmonic/kernel_embedding.hpp"
#include "harmonic/model_spaces.hpp"
#include "harmonic/report.hpp"

namespace harmonic::cli {

enum class Format { json, csv, text };
enum class Model { line, hyperboloid };

/// Options for every subcommand; each command reads the subset it needs.
struct RunConfig {
    std::string command;
    int n = 4;
    std::string k = "3/2";
    std::optional<int> p;
    std::optional<int> q;
    std::optional<std::string> c_override;
    Model model = Model::line;
    std::size_t points = 40;
    std::uint64_t seed = 42;
    double radius = 3.0;
    double half_width = 5.0;  // line configurations use [-half_width, half_width]
    std::size_t hdim = 3;     // dimension of the hyperboloid model
    double h = 1e-3;
    double third_step = 5e-3;
    double step = 0.05;       // density table spacing
    double r_max = 8.0;
    std::array<double, 3> s{-1.0, 0.0, 1.0};
    std::optional<std::string> output;
    std::optional<std::string> points_out;
    std::optional<Format> format;
};

/// Bad flag value; `flag` names the offending option.
class UsageError : public std::runtime_error {
public:
    UsageError(std::string flag, const std::string& what)
        : std::runtime_error(flag + ": " + what), flag_(std::move(flag))
    {
    }
    [[nodiscard]] const std::string& flag() const { return flag_; }

private:
    std::string flag_;
};

// Tolerances used by the checks below.
inline constexpr double kEigenResidualTol = 1e-10;
inline constexpr double kFrobeniusResidualTol = 1e-10;
inline constexpr double kClosedFormRelTol = 1e-7;
inline constexpr double kStepHalvingTol = 1e-8;
inline constexpr double kRadialLimitTol = 1e-6;
inline constexpr double kLemma2Tol = 1e-12;

namespace detail {

inline Rational parse_rational_flag(const std::string& flag, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(flag, e.what());
    }
}

inline HarmonicParams params_of(const RunConfig& cfg)
{
    HarmonicParams params{cfg.n, parse_rational_flag("--k", cfg.k)};
    if (params.n < 2) throw UsageError("--n", "dimension must be >= 2");
    if (params.k <= Rational(0)) throw UsageError("--k", "must be > 0");
    return params;
}

inline json params_json(const HarmonicParams& p) { return json{{"n", p.n}, {"k", p.k.to_string()}}; }

inline double kernel_constant(const RunConfig& cfg, const HarmonicParams& params)
{
    if (cfg.c_override) return parse_rational_flag("--c", *cfg.c_override).to_double();
    return derive_spectral_constants(params).c.to_double();
}

} // namespace detail

// ---------------------------------------------------------------------------
// Check groups. Each appends a fixed list of checks to the report.

inline void append_constants_checks(Report& rep, const HarmonicParams& params)
{
    const SpectralConstants derived = derive_spectral_constants(params);
    const SpectralConstants printed = printed_constants(params);
    const ConsistencyReport consistency = consistency_report(params);
    const LedgerOracleResult ledger = ledger_series_oracle(params, derived);
    const Rational n(params.n);

    rep.add_exact("constants.lambda_matches_printed", derived.lambda, printed.lambda);
    rep.add_exact("constants.positivity_identity", Rational(1) + derived.c,
                  (Rational(3) * n / Rational(2)) / (n / Rational(2) + 1 + params.k));
    rep.add_exact("constants.case1_c_zero", derive_spectral_constants({params.n, n - 1}).c, Rational(0));
    rep.add_exact("constants.ledger_pole", ledger.pole, Rational(0));
    rep.add_exact("constants.ledger_omega2", ledger.omega_second_derivative_at_0, params.k / Rational(3));
    const bool invariants = Rational(1) + derived.lambda + derived.c_lambda == Rational(1) - n &&
                            derived.b == n - 1 + Rational(2) * derived.c_lambda &&
                            derived.c_lambda == derived.c * derived.lambda;
    rep.add("constants.invariants", invariants, invariants, true);
    rep.add("constants.printed_discrepancy_detected", consistency.printed_checks.any_failed(),
            to_json(consistency.printed_checks), "at least one printed-set check fails");
    rep.add("constants.bishop_gromov", bishop_gromov_check(params, derived), derived.b.to_string(),
            "[0, " + (n - 1).to_string() + "]");

    json payload{{"derived", to_json(derived)},
                 {"printed", to_json(printed)},
                 {"density_exponents", to_json(density_exponents(params, derived))},
                 {"consistency", json{{"derived", to_json(consistency.derived_checks)},
                                      {"printed", to_json(consistency.printed_checks)}}}};
    if (bishop_gromov_check(params, derived)) {
        payload["classification"] = std::string(to_string(classify_density(params, derived).tag));
    }
    rep.payload["constants"] = std::move(payload);
}

inline void append_ode_checks(Report& rep, const HarmonicParams& params)
{
    const SpectralConstants constants = derive_spectral_constants(params);
    const DensityExponents exponents = density_exponents(params, constants);
    const RadialODE ode = make_radial_ode(params, constants);
    const double f0 = 1.0 + constants.c.to_double();

    constexpr double r_small = 1e-4;
    const double limit = eval_density(exponents, r_small).theta / std::pow(r_small, params.n - 1);
    rep.add_close("density.radial_limit", limit, 1.0, kRadialLimitTol);

    const auto grid = default_residual_grid();
    rep.add_at_most("ode.eigen_residual", eigen_residual(constants, exponents, grid), kEigenResidualTol);

    IntegrationConfig config;
    const FrobeniusSeries start = frobenius_start(ode, f0, config);
    rep.add_at_most("ode.frobenius_residual", start.max_residual / std::abs(f0), kFrobeniusResidualTol);

    config.r_max = 5.0;
    const RadialTable table = integrate_radial(ode, f0, config);
    const double c = constants.c.to_double();
    double worst = 0.0;
    for (std::size_t i = 0; i < table.r.size(); ++i) {
        const double exact = std::cosh(table.r[i]) + c;
        worst = std::max(worst, std::abs(table.f[i] - exact) / std::abs(exact));
    }
    rep.add_at_most("ode.integrated_vs_closed_form", worst, kClosedFormRelTol);

    config.r_max = 8.0;
    rep.add_at_most("ode.step_halving", step_halving_delta(ode, f0, config), kStepHalvingTol);

    rep.payload["ode"] = json{{"f0", f0},
                              {"series_coefficients", start.coefficients},
                              {"rows", table.r.size()},
                              {"series_rows", table.series_rows}};
}

/// Expected rank/signature of cosh(s - t) + c on a line with m points.
inline void append_line_gram_checks(Report& rep, const std::string& prefix, std::size_t m, double half_width,
                                    double c)
{
    const auto config = DistanceConfig::from_line(LineConfig::uniform(m, -half_width, half_width));
    const GramAnalysis g = gram_f(config, c);
    const int bound = c == 0.0 ? 2 : 3;
    const int expected_rank = std::min(static_cast<int>(m), bound);
    rep.add(prefix + ".rank", g.rank == expected_rank, g.rank, expected_rank);
    if (static_cast<int>(m) >= bound) {
        Signature expected{1, 1, static_cast<int>(m) - bound};
        if (c > 0.0) expected = {2, 1, static_cast<int>(m) - 3};
        if (c < 0.0) expected = {1, 2, static_cast<int>(m) - 3};
        rep.add(prefix + ".signature", g.signature == expected, to_json(g.signature), to_json(expected));
    }
    const bool probe = nondegeneracy_probe(g);
    rep.add(prefix + ".nondegenerate_subset", probe, probe, true);
    rep.payload[prefix] = to_json(g);
}

inline std::vector<HyperboloidPoint> hyperboloid_sample(const RunConfig& cfg)
{
    SeededSampler sampler(cfg.seed);
    return random_points(sampler, cfg.hdim, cfg.points, cfg.radius);
}

inline void append_hyperboloid_gram_checks(Report& rep, const std::string& prefix,
                                           const std::vector<HyperboloidPoint>& points, std::size_t hdim,
                                           double c)
{
    const auto config = DistanceConfig::from_points(points);
    const GramAnalysis g = gram_f(config, c);
    const auto m = static_cast<int>(points.size());
    const int n = static_cast<int>(hdim);
    if (c == 0.0) {
        const int expected_rank = std::min(m, n + 1);
        rep.add(prefix + ".rank", g.rank == expected_rank, g.rank, expected_rank);
        if (m >= n + 1) {
            const Signature expected{1, n, m - n - 1};
            rep.add(prefix + ".signature", g.signature == expected, to_json(g.signature), to_json(expected));
        }
    } else {
        const int bound = std::min(m, n + 2);
        rep.add(prefix + ".rank_bound", g.rank <= bound, g.rank, "<= " + std::to_string(bound));
    }
    double diag_err = 0.0;
    for (int i = 0; i < m; ++i) {
        diag_err = std::max(diag_err, std::abs(g.matrix(i, i) - (1.0 + c)));
    }
    rep.add(prefix + ".diagonal", diag_err == 0.0, diag_err, 0.0);
    const bool probe = nondegeneracy_probe(g);
    rep.add(prefix + ".nondegenerate_subset", probe, probe, true);
    rep.payload[prefix] = to_json(g);
}

inline void append_lemma2_checks(Report& rep, const std::array<double, 3>& s)
{
    const Lemma2System sys = lemma2_system(s);
    rep.add("lemma2.nonsingular", std::abs(sys.determinant) > kLemma2Tol, sys.determinant,
            "|det| > " + harmonic::detail::scalar_text(json(kLemma2Tol)), kLemma2Tol);
    if (s[1] == 0.0 && s[0] == -s[2]) {
        rep.add_close("lemma2.closed_form", sys.determinant, lemma2_symmetric_determinant(s[2]), kLemma2Tol);
    }
    json rows = json::array();
    for (const auto& row : sys.matrix) rows.push_back(json::array({row[0], row[1], row[2]}));
    rep.payload["lemma2"] = json{{"s", sys.s}, {"matrix", rows}, {"determinant", sys.determinant}};
}

inline void append_embed_checks(Report& rep, const RunConfig& cfg, double c)
{
    EmbedCheckConfig ec;
    ec.n = cfg.hdim;
    ec.seed = cfg.seed;
    ec.radius = cfg.radius;
    ec.c = c;
    ec.fd_step = cfg.h;
    ec.third_step = cfg.third_step;
    const EmbedCheckReport r = run_embed_checks(ec);
    rep.add("embed.unit_norm", r.unit_norm_pass, r.unit_norm_max_err, 0.0, ec.tol.unit_norm);
    rep.add("embed.velocity_gram", r.velocity_gram_pass, r.velocity_gram_err, 0.0, ec.tol.velocity_gram);
    rep.add("embed.third_derivative", r.third_derivative_pass, r.third_derivative_max_err, 0.0,
            ec.tol.third_derivative);
    rep.add("embed.cone_margin", r.gradient_inequality_pass, r.gradient_inequality_margin,
            ">= " + harmonic::detail::scalar_text(json(ec.tol.cone_margin)), std::abs(ec.tol.cone_margin));
}

inline void append_na_checks(Report& rep, std::span<const NACatalogEntry> entries)
{
    json rows = json::array();
    for (const auto& e : entries) {
        const HarmonicParams params = na_params(e);
        const NAIntegrality r = na_b_integrality(e);
        const std::string tag = "na.p" + std::to_string(e.p) + "_q" + std::to_string(e.q);
        rep.add_exact(tag + ".b_equals_q", r.b, Rational(e.q));
        rep.add(tag + ".b_integer", r.is_integer, r.is_integer, true);
        rows.push_back(json{{"name", e.name},
                            {"p", e.p},
                            {"q", e.q},
                            {"n", params.n},
                            {"k", params.k.to_string()},
                            {"b", r.b.to_string()},
                            {"is_integer", r.is_integer}});
    }
    rep.payload["na"] = std::move(rows);
}

// ---------------------------------------------------------------------------

inline void validate(const RunConfig& cfg)
{
    if (cfg.points < 1) throw UsageError("--points", "must be >= 1");
    if (cfg.hdim < 1) throw UsageError("--hdim", "must be >= 1");
    if (!(cfg.radius > 0.0)) throw UsageError("--radius", "must be > 0");
    if (!(cfg.half_width > 0.0)) throw UsageError("--half-width", "must be > 0");
    if (!(cfg.h >= 1e-5 && cfg.h <= 1e-2)) throw UsageError("--h", "must lie in [1e-5, 1e-2]");
    if (!(cfg.third_step >= 1e-4 && cfg.third_step <= 1e-2)) {
        throw UsageError("--third-step", "must lie in [1e-4, 1e-2]");
    }
    if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) throw UsageError("--step", "must be > 0");
    if (!(cfg.r_max > 0.0) || !std::isfinite(cfg.r_max)) throw UsageError("--r-max", "must be > 0");
    if (cfg.p.has_value() != cfg.q.has_value()) throw UsageError("--p/--q", "give both or neither");
    if (cfg.p && (*cfg.p < 1 || *cfg.q < 1)) throw UsageError("--p/--q", "must be positive");
}

/// Builds the report for every command except `density`, which emits a table.
inline Report build_report(const RunConfig& cfg)
{
    validate(cfg);
    Report rep;
    rep.command = cfg.command;

    if (cfg.command == "na") {
        if (cfg.p) {
            const NACatalogEntry entry{"custom", *cfg.p, *cfg.q};
            rep.params = json{{"p", *cfg.p}, {"q", *cfg.q}};
            append_na_checks(rep, std::span<const NACatalogEntry>(&entry, 1));
        } else {
            append_na_checks(rep, na_catalog());
        }
        return rep;
    }
    if (cfg.command == "lemma2") {
        rep.params = json{{"s", cfg.s}};
        append_lemma2_checks(rep, cfg.s);
        return rep;
    }

    const HarmonicParams params = detail::params_of(cfg);
    rep.params = detail::params_json(params);

    if (cfg.command == "constants") {
        append_constants_checks(rep, params);
    } else if (cfg.command == "ode-check") {
        append_ode_checks(rep, params);
    } else if (cfg.command == "gram") {
        const double c = cfg.c_override || cfg.model == Model::line ? detail::kernel_constant(cfg, params) : 0.0;
        rep.params["model"] = cfg.model == Model::line ? "line" : "hyperboloid";
        rep.params["points"] = cfg.points;
        rep.params["c"] = c;
        if (cfg.model == Model::line) {
            rep.params["half_width"] = cfg.half_width;
            append_line_gram_checks(rep, "gram.line", cfg.points, cfg.half_width, c);
        } else {
            rep.params["seed"] = cfg.seed;
            rep.params["radius"] = cfg.radius;
            rep.params["hdim"] = cfg.hdim;
            append_hyperboloid_gram_checks(rep, "gram.hyperboloid", hyperboloid_sample(cfg), cfg.hdim, c);
        }
    } else if (cfg.command == "embed-check") {
        const double c = cfg.c_override ? detail::kernel_constant(cfg, params) : 0.0;
        rep.params["seed"] = cfg.seed;
        rep.params["radius"] = cfg.radius;
        rep.params["hdim"] = cfg.hdim;
        rep.params["h"] = cfg.h;
        rep.params["c"] = c;
        append_embed_checks(rep, cfg, c);
    } else if (cfg.command == "report") {
        const double c = detail::kernel_constant(cfg, params);
        rep.params["seed"] = cfg.seed;
        rep.params["points"] = cfg.points;
        rep.params["radius"] = cfg.radius;
        rep.params["hdim"] = cfg.hdim;
        rep.params["h"] = cfg.h;
        append_constants_checks(rep, params);
        append_ode_checks(rep, params);
        append_line_gram_checks(rep, "gram.line_c", cfg.points, cfg.half_width, c);
        append_line_gram_checks(rep, "gram.line_c0", cfg.points, cfg.half_width, 0.0);
        RunConfig h_cfg = cfg;
        h_cfg.points = 12;
        append_hyperboloid_gram_checks(rep, "gram.hyperboloid", hyperboloid_sample(h_cfg), cfg.hdim, 0.0);
        append_lemma2_checks(rep, {-1.0, 0.0, 1.0});
        append_embed_checks(rep, cfg, c);
        append_na_checks(rep, na_catalog());
    } else {
        throw UsageError("command", "unknown command '" + cfg.command + "'");
    }
    return rep;
}

inline void write_report(std::ostream& os, const Report& rep, Format format)
{
    switch (format) {
    case Format::json: os << to_json(rep).dump(2) << '\n'; break;
    case Format::csv: write_report_csv(os, rep); break;
    case Format::text: write_report_text(os, rep); break;
    }
}

inline void write_density(std::ostream& os, const RunConfig& cfg, Format format)
{
    const HarmonicParams params = detail::params_of(cfg);
    const auto rows = density_table(density_exponents(params, derive_spectral_constants(params)), cfg.step,
                                    cfg.r_max);
    if (format == Format::json) {
        json table = json::array();
        for (const auto& row : rows) table.push_back(json::array({row.r, row.theta, row.log_theta_prime}));
        os << json{{"schema", kReportSchema},
                   {"command", "density"},
                   {"params", detail::params_json(params)},
                   {"columns", json::array({"r", "theta", "log_theta_prime"})},
                   {"rows", table}}
                  .dump(2)
           << '\n';
    } else {
        write_density_csv(os, rows);
    }
}

/// Exit 0 when every check passes, 1 on a failed check, 2 on a usage error.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    try {
        validate(cfg);
        const Format format = cfg.format.value_or(cfg.command == "density" ? Format::csv : Format::json);

        std::optional<std::string> path = cfg.output;
        if (!path) {
            if (const char* env = std::getenv("HARMONIC_EMBED_OUTPUT"); env && *env) path = env;
        }
        std::ofstream file;
        if (path) {
            file.open(*path);
            if (!file) throw UsageError("--output", "cannot open '" + *path + "' for writing");
        }
        std::ostream& sink = path ? static_cast<std::ostream&>(file) : out;

        if (cfg.command == "density") {
            write_density(sink, cfg, format);
            return 0;
        }

        Report rep = build_report(cfg);
        if (cfg.points_out && cfg.command == "gram" && cfg.model == Model::hyperboloid) {
            std::ofstream pts(*cfg.points_out);
            if (!pts) throw UsageError("--points-out", "cannot open '" + *cfg.points_out + "'");
            const auto points = hyperboloid_sample(cfg);
            write_points_csv(pts, points);
        }
        rep.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        write_report(sink, rep, format);
        return rep.passed() ? 0 : 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "verification failed: " << e.what() << '\n';
        return 1;
    }
}

/// Parses argv with CLI11 and dispatches to run().
inline int run_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Verification tool for harmonic manifolds with radial eigenfunctions cosh r + c",
                 "harmonic_embed"};
    app.require_subcommand(1);
    // --h is the finite-difference step, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    RunConfig cfg;

    std::string format_text;
    std::string model_text = "line";
    std::string s_text;
    std::string c_text;
    std::string output_text;
    std::string points_out_text;
    int p = 0;
    int q = 0;

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Manifold dimension (default 4)");
        sub->add_option("--k", cfg.k, "Ricci = -k, as a/b or decimal (default 3/2)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "json | csv | text");
        sub->add_option("--output,-o", output_text, "Write to this path instead of stdout");
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Sampler seed (default 42)");
        sub->add_option("--radius", cfg.radius, "Sampling radius around the basepoint (default 3)");
        sub->add_option("--hdim", cfg.hdim, "Dimension of the hyperboloid model (default 3)");
        sub->add_option("--c", c_text, "Override the kernel constant c (a/b or decimal)");
    };

    auto* constants = app.add_subcommand("constants", "Derived and printed spectral constants");
    add_params(constants);
    add_common(constants);

    auto* na = app.add_subcommand("na", "b-integrality on the Damek-Ricci catalog");
    na->add_option("--p", p, "Horizontal dimension of a single entry");
    na->add_option("--q", q, "Center dimension of a single entry");
    add_common(na);

    auto* density = app.add_subcommand("density", "CSV table r,theta,log_theta_prime");
    add_params(density);
    add_common(density);
    density->add_option("--step", cfg.step, "Grid spacing (default 0.05)");
    density->add_option("--r-max", cfg.r_max, "Largest r (default 8)");

    auto* ode = app.add_subcommand("ode-check", "Eigenfunction residual and radial integration");
    add_params(ode);
    add_common(ode);

    auto* gram = app.add_subcommand("gram", "Rank and signature of the kernel Gram matrix");
    add_params(gram);
    add_common(gram);
    add_sampling(gram);
    gram->add_option("--model", model_text, "line | hyperboloid (default line)");
    gram->add_option("--points", cfg.points, "Number of points (default 40)");
    gram->add_option("--half-width", cfg.half_width, "Line parameters span [-w, w] (default 5)");
    gram->add_option("--points-out", points_out_text, "Write hyperboloid points as CSV");

    auto* lemma2 = app.add_subcommand("lemma2", "Determinant of the 3x3 geodesic system");
    add_common(lemma2);
    lemma2->add_option("--s", s_text, "Three comma-separated parameters (default -1,0,1)");

    auto* embed = app.add_subcommand("embed-check", "Embedding identities on the hyperboloid");
    add_params(embed);
    add_common(embed);
    add_sampling(embed);
    embed->add_option("--h", cfg.h, "Finite-difference step (default 1e-3)");
    embed->add_option("--third-step", cfg.third_step, "Third-derivative stencil step (default 5e-3)");

    auto* report = app.add_subcommand("report", "Run every check");
    add_params(report);
    add_common(report);
    add_sampling(report);
    report->add_option("--points", cfg.points, "Line configuration size (default 40)");
    report->add_option("--h", cfg.h, "Finite-difference step (default 1e-3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!format_text.empty()) {
            if (format_text == "json") cfg.format = Format::json;
            else if (format_text == "csv") cfg.format = Format::csv;
            else if (format_text == "text") cfg.format = Format::text;
            else throw UsageError("--format", "expected json, csv or text");
        }
        if (model_text == "line") cfg.model = Model::line;
        else if (model_text == "hyperboloid") cfg.model = Model::hyperboloid;
        else throw UsageError("--model", "expected line or hyperboloid");
        if (!c_text.empty()) cfg.c_override = c_text;
        if (!output_text.empty()) cfg.output = output_text;
        if (!points_out_text.empty()) cfg.points_out = points_out_text;
        if (na->count("--p") || na->count("--q")) {
            if (na->count("--p")) cfg.p = p;
            if (na->count("--q")) cfg.q = q;
        }
        if (!s_text.empty()) {
            std::vector<double> values;
            std::stringstream ss(s_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    values.push_back(std::stod(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw UsageError("--s", "not a number: '" + item + "'");
                }
            }
            if (values.size() != 3) throw UsageError("--s", "expected exactly three values");
            cfg.s = {values[0], values[1], values[2]};
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return run(cfg, out, err);
}

} // namespace harmonic::cli
