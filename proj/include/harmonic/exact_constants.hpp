#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/laurent_series.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Dimension n and Einstein constant k of a harmonic manifold, Ricci = -k.
struct HarmonicParams {
    int n = 0;
    Rational k;

    void validate() const
    {
        if (n < 2) {
            throw std::invalid_argument("HarmonicParams: dimension n must be >= 2, got " + std::to_string(n));
        }
        if (k <= Rational(0)) {
            throw std::invalid_argument("HarmonicParams: k must be > 0, got " + k.to_string());
        }
    }

    friend bool operator==(const HarmonicParams&, const HarmonicParams&) = default;
};

/// Eigenvalue, eigenfunction shift and density exponent of the radial
/// eigenfunction cosh r + c.
struct SpectralConstants {
    Rational lambda;
    Rational c;
    Rational c_lambda;
    Rational b;

    friend bool operator==(const SpectralConstants&, const SpectralConstants&) = default;
};

/// Theta(r) = 2^log2_prefactor * sinh(r/2)^sinh_half_exp * cosh(r/2)^cosh_half_exp.
struct DensityExponents {
    Rational log2_prefactor;
    Rational sinh_half_exp;
    Rational cosh_half_exp;

    friend bool operator==(const DensityExponents&, const DensityExponents&) = default;
};

enum class DensityTag { RealHyperbolicTop, RealHyperbolicNextEigenvalue, Intermediate };

inline std::string_view to_string(DensityTag tag)
{
    switch (tag) {
    case DensityTag::RealHyperbolicTop: return "RealHyperbolicTop";
    case DensityTag::RealHyperbolicNextEigenvalue: return "RealHyperbolicNextEigenvalue";
    case DensityTag::Intermediate: return "Intermediate";
    }
    return "?";
}

struct DensityClass {
    DensityTag tag;
    Rational b;
};

/// Damek-Ricci space built from an H-type group with horizontal space of
/// dimension p and center of dimension q.
struct NACatalogEntry {
    std::string name;
    int p = 0;
    int q = 0;
};

// ---------------------------------------------------------------------------
// Derivation chain

/// Solves
///   1 + lambda + c*lambda = 1 - n            (small-r limit of the density)
///   k/3 = (n-1)/3 + c*lambda/2              (Ledger's formula, Ricci = -k)
/// exactly, then c = c*lambda / lambda and b = n - 1 + 2 c*lambda.
inline SpectralConstants derive_spectral_constants(const HarmonicParams& params)
{
    params.validate();
    const Rational n(params.n);
    const Rational& k = params.k;

    SpectralConstants out;
    out.c_lambda = Rational(2) * (k - (n - 1)) / Rational(3);
    out.lambda = -n - out.c_lambda;
    out.c = out.c_lambda / out.lambda;  // lambda < 0 because k > 0
    out.b = (n - 1) + Rational(2) * out.c_lambda;
    return out;
}

/// The constants in the form they are usually quoted, with k entering c,
/// c*lambda and b with a + sign. Kept only so the discrepancy report can
/// evaluate them; no consistency is enforced here.
inline SpectralConstants printed_constants(const HarmonicParams& params)
{
    params.validate();
    const Rational n(params.n);
    const Rational& k = params.k;
    const Rational denom = n / Rational(2) + 1 + k;

    SpectralConstants out;
    out.lambda = Rational(-2, 3) * denom;
    out.c = (k + n - 1) / denom;
    out.c_lambda = Rational(-2, 3) * (k + n - 1);
    out.b = (n - 1) - Rational(4, 3) * (k + n - 1);
    return out;
}

inline DensityExponents density_exponents(const HarmonicParams& params, const SpectralConstants& constants)
{
    const Rational top(params.n - 1);
    return {top, top, top + Rational(2) * constants.c_lambda};
}

/// 0 <= b <= n - 1; for derived constants this is (n-1)/4 <= k <= n-1.
inline bool bishop_gromov_check(const HarmonicParams& params, const SpectralConstants& constants)
{
    return constants.b >= Rational(0) && constants.b <= Rational(params.n - 1);
}

inline DensityClass classify_density(const HarmonicParams& params, const SpectralConstants& constants)
{
    const Rational top(params.n - 1);
    if (constants.b < Rational(0) || constants.b > top) {
        throw std::invalid_argument("classify_density: b = " + constants.b.to_string() + " outside [0, " +
                                    top.to_string() + "]");
    }
    if (constants.b == top) return {DensityTag::RealHyperbolicTop, constants.b};
    if (constants.b.is_zero()) return {DensityTag::RealHyperbolicNextEigenvalue, constants.b};
    return {DensityTag::Intermediate, constants.b};
}

// ---------------------------------------------------------------------------
// Ledger oracle

struct LedgerOracleResult {
    LaurentSeries log_omega_prime;  // omega'/omega
    Rational pole;
    Rational omega_second_derivative_at_0;

    /// pole vanishes and omega''(0) = -Ricci/3 = k/3.
    [[nodiscard]] bool passes(const HarmonicParams& params) const
    {
        return pole.is_zero() && omega_second_derivative_at_0 == params.k / Rational(3);
    }
};

/// Expands omega'/omega = -(1+lambda) coth r - c*lambda csch r - (n-1)/r as an
/// exact Laurent series. With omega(0) = 1 the coefficient of r is omega''(0).
inline LedgerOracleResult ledger_series_oracle(const HarmonicParams& params, const SpectralConstants& constants)
{
    const Rational one(1);
    const LaurentSeries s = (-(one + constants.lambda)) * series::coth() +
                            (-constants.c_lambda) * series::csch() +
                            (-Rational(params.n - 1)) * series::inverse_r();
    return {s, s.pole, s.coefficient_of_r()};
}

// ---------------------------------------------------------------------------
// Consistency report

struct ConsistencyChecks {
    bool case1_c_zero = false;       // k = n-1 gives c = 0
    bool positivity_identity = false; // 1 + c = (3n/2) / (n/2 + 1 + k)
    bool ledger_oracle = false;

    [[nodiscard]] bool all() const { return case1_c_zero && positivity_identity && ledger_oracle; }
    [[nodiscard]] bool any_failed() const { return !all(); }
};

struct ConsistencyReport {
    HarmonicParams params;
    SpectralConstants derived;
    SpectralConstants printed;
    ConsistencyChecks derived_checks;
    ConsistencyChecks printed_checks;
};

namespace detail {

template <typename ConstantsFn>
ConsistencyChecks run_consistency_checks(const HarmonicParams& params, ConstantsFn&& constants_of)
{
    const SpectralConstants constants = constants_of(params);
    const Rational n(params.n);

    ConsistencyChecks checks;
    checks.case1_c_zero = constants_of(HarmonicParams{params.n, n - 1}).c.is_zero();
    const Rational expected_one_plus_c = (Rational(3) * n / Rational(2)) / (n / Rational(2) + 1 + params.k);
    checks.positivity_identity = (Rational(1) + constants.c) == expected_one_plus_c;
    checks.ledger_oracle = ledger_series_oracle(params, constants).passes(params);
    return checks;
}

} // namespace detail

inline ConsistencyReport consistency_report(const HarmonicParams& params)
{
    params.validate();
    ConsistencyReport report;
    report.params = params;
    report.derived = derive_spectral_constants(params);
    report.printed = printed_constants(params);
    report.derived_checks = detail::run_consistency_checks(params, derive_spectral_constants);
    report.printed_checks = detail::run_consistency_checks(params, printed_constants);
    return report;
}

// ---------------------------------------------------------------------------
// Damek-Ricci (NA) spaces

/// n = p + q + 1 and k = q + p/4, with the metric normalized so that the
/// symmetric members have sectional curvature in [-1, -1/4].
inline HarmonicParams na_params(const NACatalogEntry& entry)
{
    if (entry.p < 1 || entry.q < 1) {
        throw std::invalid_argument("na_params: p and q must be positive (p=" + std::to_string(entry.p) +
                                    ", q=" + std::to_string(entry.q) + ")");
    }
    return {entry.p + entry.q + 1, Rational(entry.q) + Rational(entry.p, 4)};
}

struct NAIntegrality {
    Rational b;
    bool is_integer = false;
};

inline NAIntegrality na_b_integrality(const NACatalogEntry& entry)
{
    const SpectralConstants constants = derive_spectral_constants(na_params(entry));
    return {constants.b, constants.b.is_integer()};
}

/// Dimensions (p, q) of a few Damek-Ricci spaces. The symmetric ones are the
/// rank-one spaces CH^m (p = 2m-2, q = 1), HH^m (p = 4m-4, q = 3) and the
/// Cayley plane (p = 8, q = 7). Center dimensions other than 1, 3, 7 only
/// occur for non-symmetric spaces.
inline std::span<const NACatalogEntry> na_catalog()
{
    static const std::vector<NACatalogEntry> catalog = {
        {"complex hyperbolic CH^2", 2, 1},
        {"complex hyperbolic CH^3", 4, 1},
        {"quaternionic hyperbolic HH^2", 4, 3},
        {"quaternionic hyperbolic HH^3", 8, 3},
        {"non-symmetric H-type, center dim 5", 8, 5},
        {"non-symmetric H-type, center dim 6", 8, 6},
        {"Cayley hyperbolic plane OH^2", 8, 7},
    };
    return catalog;
}

} // namespace harmonic
