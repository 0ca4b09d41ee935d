#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/error.hpp"
#include "harmonic/exact_constants.hpp"
#include "harmonic/laurent_series.hpp"

namespace harmonic {

struct DensityEval {
    double r = 0.0;
    double theta = 0.0;
    double log_theta_prime = 0.0;  // Theta'/Theta
};

/// Theta(r) = 2^L sinh(r/2)^a cosh(r/2)^b, with Theta'/Theta = (a/2) coth(r/2) + (b/2) tanh(r/2).
inline DensityEval eval_density(const DensityExponents& exponents, double r)
{
    if (!(r > 0.0)) {
        throw std::invalid_argument("eval_density: r must be > 0 (got " + std::to_string(r) + ")");
    }
    const double half = 0.5 * r;
    const double a = exponents.sinh_half_exp.to_double();
    const double b = exponents.cosh_half_exp.to_double();
    DensityEval out;
    out.r = r;
    out.theta = std::exp2(exponents.log2_prefactor.to_double()) * std::pow(std::sinh(half), a) *
                std::pow(std::cosh(half), b);
    out.log_theta_prime = 0.5 * a / std::tanh(half) + 0.5 * b * std::tanh(half);
    return out;
}

/// Sample the density on r = step, 2 step, ... <= r_max.
inline std::vector<DensityEval> density_table(const DensityExponents& exponents, double step, double r_max)
{
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("density_table: step must be > 0");
    }
    if (!(r_max > 0.0) || !std::isfinite(r_max)) {
        throw std::invalid_argument("density_table: r_max must be > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor(r_max / step + 1e-9));
    std::vector<DensityEval> rows;
    rows.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        rows.push_back(eval_density(exponents, static_cast<double>(i) * step));
    }
    return rows;
}

inline void write_density_csv(std::ostream& os, std::span<const DensityEval> rows)
{
    os << "r,theta,log_theta_prime\n";
    char buf[96];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", row.r, row.theta, row.log_theta_prime);
        os << buf;
    }
}

// ---------------------------------------------------------------------------
// Radial Sturm-Liouville equation  f'' + (Theta'/Theta) f' + lambda f = 0

struct RadialODE {
    SpectralConstants constants;
    DensityExponents exponents;
    Rational lambda;

    [[nodiscard]] double coefficient(double r) const
    {
        const double half = 0.5 * r;
        return 0.5 * exponents.sinh_half_exp.to_double() / std::tanh(half) +
               0.5 * exponents.cosh_half_exp.to_double() * std::tanh(half);
    }
};

inline RadialODE make_radial_ode(const HarmonicParams& params, const SpectralConstants& constants)
{
    return {constants, density_exponents(params, constants), constants.lambda};
}

struct IntegrationConfig {
    int series_order = 12;       // highest even power kept in the start series
    double switch_radius = 0.5;  // series used on [0, switch_radius]
    double step = 1e-3;
    double r_max = 8.0;

    void validate() const
    {
        if (series_order < 8 || series_order > 30) {
            throw std::invalid_argument("IntegrationConfig: series_order must lie in [8, 30]");
        }
        if (!(switch_radius > 0.0 && switch_radius < 1.0)) {
            throw std::invalid_argument("IntegrationConfig: switch_radius must lie in (0, 1)");
        }
        if (!(step > 0.0 && step <= 1e-2)) {
            throw std::invalid_argument("IntegrationConfig: step must lie in (0, 1e-2]");
        }
        if (!(r_max > 0.0) || !std::isfinite(r_max)) {
            throw std::invalid_argument("IntegrationConfig: r_max must be > 0");
        }
    }
};

/// Even power series f(r) = sum_j coefficients[j] r^(2j) around the regular
/// singular point r = 0.
struct FrobeniusSeries {
    std::vector<double> coefficients;
    double switch_radius = 0.0;
    double max_residual = 0.0;  // max |f'' + P f' + lambda f| on (0, switch_radius]

    [[nodiscard]] double value(double r) const
    {
        const double r2 = r * r;
        double sum = 0.0;
        for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * r2 + *it;
        return sum;
    }

    [[nodiscard]] double derivative(double r) const
    {
        const double r2 = r * r;
        double sum = 0.0;
        for (std::size_t j = coefficients.size(); j-- > 1;) {
            sum = sum * r2 + 2.0 * static_cast<double>(j) * coefficients[j];
        }
        return sum * r;
    }

    [[nodiscard]] double second_derivative(double r) const
    {
        const double r2 = r * r;
        double sum = 0.0;
        for (std::size_t j = coefficients.size(); j-- > 1;) {
            const double jj = static_cast<double>(j);
            sum = sum * r2 + 2.0 * jj * (2.0 * jj - 1.0) * coefficients[j];
        }
        return sum;
    }
};

namespace detail {

// Coefficients p_i of the analytic part of Theta'/Theta = a/r + sum_i p_i r^(2i+1):
//   (a/2) coth(r/2) = a sum_k B_2k r^(2k-1) / (2k)!
//   (b/2) tanh(r/2) = b sum_k (4^k - 1) B_2k r^(2k-1) / (2k)!
inline std::vector<double> odd_coefficient_tail(const DensityExponents& exponents, std::size_t count)
{
    const auto& bernoulli = series::bernoulli_even();
    const Rational a = exponents.sinh_half_exp;
    const Rational b = exponents.cosh_half_exp;
    std::vector<double> out;
    out.reserve(count);
    long double factorial = 1.0L;
    long double four_k = 1.0L;
    for (std::size_t k = 1; k <= count; ++k) {
        factorial *= static_cast<long double>((2 * k - 1) * (2 * k));
        four_k *= 4.0L;
        const long double weight = a.to_long_double() + b.to_long_double() * (four_k - 1.0L);
        out.push_back(static_cast<double>(weight * bernoulli[k].to_long_double() / factorial));
    }
    return out;
}

} // namespace detail

/// Regular solution with f(0) = f0, f'(0) = 0. Substituting the even series
/// into the equation gives, for m >= 0,
///   (2m+2)(2m+1+a) c_{m+1} = -lambda c_m - sum_{j=1..m} p_{m-j} 2j c_j.
inline FrobeniusSeries frobenius_start(const RadialODE& ode, double f0, const IntegrationConfig& config)
{
    config.validate();
    if (f0 == 0.0 || !std::isfinite(f0)) {
        throw std::invalid_argument("frobenius_start: f0 must be finite and nonzero");
    }
    const std::size_t terms = static_cast<std::size_t>(config.series_order / 2) + 1;
    const std::vector<double> tail = detail::odd_coefficient_tail(ode.exponents, terms);
    const double a = ode.exponents.sinh_half_exp.to_double();
    const double lambda = ode.lambda.to_double();

    FrobeniusSeries s;
    s.switch_radius = config.switch_radius;
    s.coefficients.assign(terms, 0.0);
    s.coefficients[0] = f0;
    for (std::size_t m = 0; m + 1 < terms; ++m) {
        double rhs = -lambda * s.coefficients[m];
        for (std::size_t j = 1; j <= m; ++j) {
            rhs -= tail[m - j] * 2.0 * static_cast<double>(j) * s.coefficients[j];
        }
        const double mm = static_cast<double>(m);
        s.coefficients[m + 1] = rhs / ((2.0 * mm + 2.0) * (2.0 * mm + 1.0 + a));
        if (!std::isfinite(s.coefficients[m + 1])) {
            throw VerificationError("frobenius_start: non-finite coefficient at order " +
                                    std::to_string(2 * (m + 1)));
        }
    }

    constexpr int samples = 100;
    for (int i = 1; i <= samples; ++i) {
        const double r = config.switch_radius * i / samples;
        const double res = s.second_derivative(r) + ode.coefficient(r) * s.derivative(r) + lambda * s.value(r);
        s.max_residual = std::max(s.max_residual, std::abs(res));
    }
    return s;
}

/// Sampled solution (r, f, f') on [0, r_max].
struct RadialTable {
    std::vector<double> r;
    std::vector<double> f;
    std::vector<double> df;
    std::size_t series_rows = 0;  // leading rows taken from the power series
};

/// Power series on [0, switch_radius], classical RK4 with fixed step beyond.
inline RadialTable integrate_radial(const RadialODE& ode, double f0, const IntegrationConfig& config)
{
    const FrobeniusSeries start = frobenius_start(ode, f0, config);
    const double lambda = ode.lambda.to_double();
    const double h = config.step;
    constexpr double blowup = 1e12;

    RadialTable table;
    const auto full_steps = static_cast<std::size_t>(std::floor(config.r_max / h + 1e-9));
    table.r.reserve(full_steps + 2);
    table.f.reserve(full_steps + 2);
    table.df.reserve(full_steps + 2);

    auto push = [&](double r, double f, double df) {
        if (!std::isfinite(f) || std::abs(f) > blowup) {
            throw VerificationError("integrate_radial: solution blew up at r = " + std::to_string(r));
        }
        table.r.push_back(r);
        table.f.push_back(f);
        table.df.push_back(df);
    };

    std::size_t i = 0;
    for (; i <= full_steps; ++i) {
        const double r = static_cast<double>(i) * h;
        if (r > config.switch_radius + 1e-12 * h) break;
        push(r, start.value(r), start.derivative(r));
    }
    table.series_rows = table.r.size();

    auto rhs = [&](double r, double f, double df, double& d_f, double& d_df) {
        d_f = df;
        d_df = -ode.coefficient(r) * df - lambda * f;
    };
    auto rk4 = [&](double r, double dt, double& f, double& df) {
        double k1f, k1d, k2f, k2d, k3f, k3d, k4f, k4d;
        rhs(r, f, df, k1f, k1d);
        rhs(r + 0.5 * dt, f + 0.5 * dt * k1f, df + 0.5 * dt * k1d, k2f, k2d);
        rhs(r + 0.5 * dt, f + 0.5 * dt * k2f, df + 0.5 * dt * k2d, k3f, k3d);
        rhs(r + dt, f + dt * k3f, df + dt * k3d, k4f, k4d);
        f += dt / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
        df += dt / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    };

    double r = table.r.back();
    double f = table.f.back();
    double df = table.df.back();
    for (; i <= full_steps; ++i) {
        const double next = static_cast<double>(i) * h;
        rk4(r, next - r, f, df);
        r = next;
        push(r, f, df);
    }
    if (config.r_max - r > 1e-9 * h && config.r_max <= config.switch_radius) {
        push(config.r_max, start.value(config.r_max), start.derivative(config.r_max));
        table.series_rows = table.r.size();
    } else if (config.r_max - r > 1e-9 * h) {
        rk4(r, config.r_max - r, f, df);
        r = config.r_max;
        push(r, f, df);
    }
    return table;
}

/// Relative change of f(r_max) when the step is halved.
inline double step_halving_delta(const RadialODE& ode, double f0, IntegrationConfig config)
{
    const double coarse = integrate_radial(ode, f0, config).f.back();
    config.step *= 0.5;
    const double fine = integrate_radial(ode, f0, config).f.back();
    return std::abs(fine - coarse) / std::max(std::abs(fine), 1e-300);
}

/// r = 0.05, 0.10, ..., 8.00.
inline std::vector<double> default_residual_grid()
{
    std::vector<double> grid;
    grid.reserve(160);
    for (int i = 1; i <= 160; ++i) grid.push_back(0.05 * i);
    return grid;
}

/// max |f'' + (Theta'/Theta) f' + lambda f| for f = cosh r + c.
inline double eigen_residual(const SpectralConstants& constants, const DensityExponents& exponents,
                             std::span<const double> grid)
{
    if (constants.lambda.is_zero()) {
        throw std::invalid_argument("eigen_residual: lambda = 0 is not an admissible eigenvalue");
    }
    const double lambda = constants.lambda.to_double();
    const double c = constants.c.to_double();
    const RadialODE ode{constants, exponents, constants.lambda};
    double worst = 0.0;
    for (double r : grid) {
        if (!(r > 0.0)) {
            throw std::invalid_argument("eigen_residual: grid points must be > 0");
        }
        const double res = std::cosh(r) + ode.coefficient(r) * std::sinh(r) + lambda * (std::cosh(r) + c);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

} // namespace harmonic
