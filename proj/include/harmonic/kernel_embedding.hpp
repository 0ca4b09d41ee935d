#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/jacobi.hpp"
#include "harmonic/model_spaces.hpp"

namespace harmonic {

/// Pairwise distances of m points.
class DistanceConfig {
public:
    /// Checks symmetry, zero diagonal, nonnegativity and the triangle
    /// inequality (within 1e-9).
    explicit DistanceConfig(Matrix dist) : dist_(std::move(dist))
    {
        const std::size_t m = dist_.size();
        if (!dist_.is_symmetric()) {
            throw std::invalid_argument("DistanceConfig: distance matrix is not symmetric");
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (dist_(i, i) != 0.0) throw std::invalid_argument("DistanceConfig: nonzero diagonal");
            for (std::size_t j = 0; j < m; ++j) {
                if (!(dist_(i, j) >= 0.0) || !std::isfinite(dist_(i, j))) {
                    throw std::invalid_argument("DistanceConfig: negative or non-finite distance");
                }
            }
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    if (dist_(i, k) > dist_(i, j) + dist_(j, k) + 1e-9) {
                        throw std::invalid_argument("DistanceConfig: triangle inequality violated at (" +
                                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                                    std::to_string(k) + ")");
                    }
    }

    static DistanceConfig from_line(const LineConfig& line)
    {
        const std::size_t m = line.size();
        Matrix d(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) d(i, j) = line.distance(i, j);
        return DistanceConfig(std::move(d));
    }

    static DistanceConfig from_points(std::span<const HyperboloidPoint> points)
    {
        const std::size_t m = points.size();
        Matrix d(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) d(i, j) = d(j, i) = distance(points[i], points[j]);
        return DistanceConfig(std::move(d));
    }

    [[nodiscard]] std::size_t size() const { return dist_.size(); }
    [[nodiscard]] const Matrix& dist() const { return dist_; }
    double operator()(std::size_t i, std::size_t j) const { return dist_(i, j); }

private:
    Matrix dist_;
};

/// Rank tolerance: |mu| <= 1e-8 max|mu| counts as zero.
inline constexpr double kRankTolerance = 1e-8;

struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct GramAnalysis {
    Matrix matrix;
    std::vector<double> eigenvalues;  // ascending
    int rank = 0;
    Signature signature;
    double tolerance = kRankTolerance;
    double c = 0.0;  // constant added to the cosh kernel
};

inline GramAnalysis analyze_symmetric(Matrix matrix, double tolerance = kRankTolerance, double c = 0.0)
{
    GramAnalysis out;
    out.eigenvalues = jacobi_eigen(matrix).values;
    out.matrix = std::move(matrix);
    out.tolerance = tolerance;
    out.c = c;
    double largest = 0.0;
    for (double mu : out.eigenvalues) largest = std::max(largest, std::abs(mu));
    const double cutoff = tolerance * largest;
    for (double mu : out.eigenvalues) {
        if (largest == 0.0 || std::abs(mu) <= cutoff) {
            ++out.signature.n_zero;
        } else if (mu > 0.0) {
            ++out.signature.n_plus;
        } else {
            ++out.signature.n_minus;
        }
    }
    out.rank = out.signature.n_plus + out.signature.n_minus;
    return out;
}

/// B(f_p, f_q) = f_q(p) = cosh d(p, q) + c.
inline GramAnalysis gram_f(const DistanceConfig& config, double c, double tolerance = kRankTolerance)
{
    const std::size_t m = config.size();
    Matrix b(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) b(i, j) = b(j, i) = std::cosh(config(i, j)) + c;
    return analyze_symmetric(std::move(b), tolerance, c);
}

/// B(Phi_p, Phi_q) = cosh d(p, q); the diagonal is exactly 1.
inline GramAnalysis gram_phi(const DistanceConfig& config, double tolerance = kRankTolerance)
{
    return gram_f(config, 0.0, tolerance);
}

/// Ranks of gram_f on configurations of growing size.
inline std::vector<std::pair<std::size_t, int>>
rank_saturation(const std::function<DistanceConfig(std::size_t)>& generator, double c,
                std::span<const std::size_t> m_list)
{
    for (std::size_t i = 1; i < m_list.size(); ++i) {
        if (m_list[i] <= m_list[i - 1]) throw std::invalid_argument("rank_saturation: m_list must increase");
    }
    std::vector<std::pair<std::size_t, int>> out;
    out.reserve(m_list.size());
    for (std::size_t m : m_list) out.emplace_back(m, gram_f(generator(m), c).rank);
    return out;
}

/// True iff the form restricted to a maximal independent subset of the
/// sample points is nondegenerate. The subset is picked by column-pivoted
/// Gram-Schmidt; for a symmetric matrix of rank r, any r independent columns
/// index a nonsingular principal block.
inline bool nondegeneracy_probe(const GramAnalysis& analysis)
{
    const std::size_t m = analysis.matrix.size();
    const auto r = static_cast<std::size_t>(analysis.rank);
    if (r == 0) return false;

    std::vector<std::vector<double>> cols(m, std::vector<double>(m));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) cols[j][i] = analysis.matrix(i, j);

    std::vector<bool> used(m, false);
    std::vector<std::size_t> chosen;
    for (std::size_t step = 0; step < r; ++step) {
        std::size_t best = m;
        double best_norm = -1.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            double norm2 = 0.0;
            for (double x : cols[j]) norm2 += x * x;
            if (norm2 > best_norm) {
                best_norm = norm2;
                best = j;
            }
        }
        used[best] = true;
        chosen.push_back(best);
        const double inv = 1.0 / std::sqrt(best_norm);
        std::vector<double> u = cols[best];
        for (double& x : u) x *= inv;
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            double dot = 0.0;
            for (std::size_t i = 0; i < m; ++i) dot += u[i] * cols[j][i];
            for (std::size_t i = 0; i < m; ++i) cols[j][i] -= dot * u[i];
        }
    }
    std::sort(chosen.begin(), chosen.end());
    const GramAnalysis sub =
        analyze_symmetric(analysis.matrix.principal_submatrix(chosen), analysis.tolerance, analysis.c);
    return sub.signature.n_zero == 0 && sub.rank == static_cast<int>(r);
}

// ---------------------------------------------------------------------------
// Embedding identities

using Kernel2 = std::function<double(double, double)>;

/// K(s, t) = cosh(s - t) + c on an abstract unit-speed line.
inline Kernel2 line_kernel(double c = 0.0)
{
    return [c](double s, double t) { return std::cosh(s - t) + c; };
}

/// K(s, t) = cosh d(gamma(s), gamma(t)) + c.
inline Kernel2 geodesic_kernel(const GeodesicH& g, double c = 0.0)
{
    return [g, c](double s, double t) { return std::cosh(distance(geodesic_point(g, s), geodesic_point(g, t))) + c; };
}

/// Central mixed difference for d^2 K / ds dt at s = t = 0, i.e.
/// B(Phi', Phi') along the curve. Expected value -1 + O(h^2).
inline double velocity_gram_fd(const Kernel2& kernel, double h)
{
    if (!(h >= 1e-5 && h <= 1e-2)) {
        throw std::invalid_argument("velocity_gram_fd: step must lie in [1e-5, 1e-2]");
    }
    return (kernel(h, h) - kernel(h, -h) - kernel(-h, h) + kernel(-h, -h)) / (4.0 * h * h);
}

/// Sample parameters at which u''' - u' is estimated.
inline constexpr std::array<double, 5> kThirdDerivativeSamples = {-1.0, -0.5, 0.0, 0.5, 1.0};

/// u(t) = cosh d(gamma(t), q) + c obeys u''' = u'. Fourth-order 7-point
/// central stencils for both derivatives; returns max |u''' - u'| over the
/// sample parameters.
inline double third_derivative_check(const GeodesicH& g, const HyperboloidPoint& q, double c, double h)
{
    if (!(h >= 1e-4 && h <= 1e-2)) {
        throw std::invalid_argument("third_derivative_check: step must lie in [1e-4, 1e-2]");
    }
    auto u = [&](double t) { return std::cosh(distance(geodesic_point(g, t), q)) + c; };
    double worst = 0.0;
    for (double t : kThirdDerivativeSamples) {
        std::array<double, 7> v{};
        for (int k = -3; k <= 3; ++k) v[static_cast<std::size_t>(k + 3)] = u(t + k * h);
        // index 3 is t
        const double d1 = (-v[0] + 9.0 * v[1] - 45.0 * v[2] + 45.0 * v[4] - 9.0 * v[5] + v[6]) / (60.0 * h);
        const double d3 = (v[0] - 8.0 * v[1] + 13.0 * v[2] - 13.0 * v[4] + 8.0 * v[5] - v[6]) / (8.0 * h * h * h);
        worst = std::max(worst, std::abs(d3 - d1));
    }
    return worst;
}

struct Lemma2System {
    std::array<double, 3> s{};
    std::array<std::array<double, 3>, 3> matrix{};
    double determinant = 0.0;
};

/// Rows: cosh s_i, sinh s_i, 1. Determinant by cofactor expansion along the
/// first row.
inline Lemma2System lemma2_system(const std::array<double, 3>& s)
{
    Lemma2System out;
    out.s = s;
    for (std::size_t i = 0; i < 3; ++i) {
        out.matrix[0][i] = std::cosh(s[i]);
        out.matrix[1][i] = std::sinh(s[i]);
        out.matrix[2][i] = 1.0;
    }
    const auto& a = out.matrix;
    out.determinant = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                      a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                      a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    return out;
}

/// -2 sinh(tau) (cosh(tau) - 1): the determinant for s = (-tau, 0, tau).
inline double lemma2_symmetric_determinant(double tau)
{
    return -2.0 * std::sinh(tau) * (std::cosh(tau) - 1.0);
}

struct ConeMargin {
    double value = 0.0;          // h(x)
    double gradient_norm = 0.0;  // |grad h|(x), finite differences
    double margin = 0.0;         // value - gradient_norm
};

/// h = sum a_i cosh d(p_i, .) with a_i >= 0 satisfies |grad h| <= h. The
/// gradient is estimated by central differences along geodesics leaving x
/// in the directions of a Q-orthonormal tangent frame.
inline ConeMargin cone_gradient_inequality(std::span<const HyperboloidPoint> points, std::span<const double> weights,
                                           const HyperboloidPoint& x, double h)
{
    if (points.size() != weights.size()) {
        throw std::invalid_argument("cone_gradient_inequality: points and weights differ in length");
    }
    if (!(h > 0.0 && h <= 1e-2)) {
        throw std::invalid_argument("cone_gradient_inequality: step must lie in (0, 1e-2]");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (weights[i] < 0.0) {
            throw std::invalid_argument("cone_gradient_inequality: weights must be nonnegative");
        }
        if (weights[i] > 0.0 && distance(points[i], x) <= 2.0 * h) {
            throw std::invalid_argument("cone_gradient_inequality: test point coincides with a source point");
        }
    }
    auto field = [&](const HyperboloidPoint& y) {
        double sum = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) sum += weights[i] * std::cosh(distance(points[i], y));
        return sum;
    };

    ConeMargin out;
    out.value = field(x);
    double grad2 = 0.0;
    for (const auto& e : tangent_frame(x)) {
        const GeodesicH g{x, e};
        const double d = (field(geodesic_point(g, h)) - field(geodesic_point(g, -h))) / (2.0 * h);
        grad2 += d * d;
    }
    out.gradient_norm = std::sqrt(grad2);
    out.margin = out.value - out.gradient_norm;
    return out;
}

// ---------------------------------------------------------------------------
// Combined embedding report

struct EmbedCheckTolerances {
    double unit_norm = 0.0;         // gram_phi diagonal must be exactly 1
    double velocity_gram = 1e-5;    // |B(Phi', Phi') + 1|
    double third_derivative = 1e-4; // max |u''' - u'|
    double cone_margin = -1e-6;     // lower bound on |h| - |grad h|
};

struct EmbedCheckReport {
    double unit_norm_max_err = 0.0;
    double velocity_gram_err = 0.0;  // worst of the line and hyperboloid kernels
    double third_derivative_max_err = 0.0;
    double gradient_inequality_margin = 0.0;  // minimum over all trials

    bool unit_norm_pass = false;
    bool velocity_gram_pass = false;
    bool third_derivative_pass = false;
    bool gradient_inequality_pass = false;

    [[nodiscard]] bool all_pass() const
    {
        return unit_norm_pass && velocity_gram_pass && third_derivative_pass && gradient_inequality_pass;
    }
};

struct EmbedCheckConfig {
    std::size_t n = 3;           // dimension of the hyperbolic model
    std::uint64_t seed = 42;
    double radius = 3.0;
    double c = 0.0;
    double fd_step = 1e-3;       // velocity Gram step
    double third_step = 5e-3;    // third-derivative stencil step
    std::size_t gram_points = 12;
    std::size_t profile_points = 20;
    std::size_t cone_trials = 100;
    std::size_t cone_sources = 5;
    EmbedCheckTolerances tol;
};

/// A random unit-speed geodesic through a random point.
inline GeodesicH random_geodesic(SeededSampler& sampler, std::size_t n, double radius)
{
    const HyperboloidPoint base = random_points(sampler, n, 1, radius).front();
    MinkowskiVector dir(std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 1; i <= n; ++i) dir[i] = sampler.normal();
    return make_geodesic(base, dir);
}

inline EmbedCheckReport run_embed_checks(const EmbedCheckConfig& cfg)
{
    SeededSampler sampler(cfg.seed);
    EmbedCheckReport rep;

    const auto points = random_points(sampler, cfg.n, cfg.gram_points, cfg.radius);
    const GramAnalysis phi = gram_phi(DistanceConfig::from_points(points));
    for (std::size_t i = 0; i < phi.matrix.size(); ++i) {
        rep.unit_norm_max_err = std::max(rep.unit_norm_max_err, std::abs(phi.matrix(i, i) - 1.0));
    }
    rep.unit_norm_pass = rep.unit_norm_max_err <= cfg.tol.unit_norm;

    const GeodesicH g = random_geodesic(sampler, cfg.n, cfg.radius);
    const double line_err = std::abs(velocity_gram_fd(line_kernel(cfg.c), cfg.fd_step) + 1.0);
    const double hyp_err = std::abs(velocity_gram_fd(geodesic_kernel(g, cfg.c), cfg.fd_step) + 1.0);
    rep.velocity_gram_err = std::max(line_err, hyp_err);
    rep.velocity_gram_pass = rep.velocity_gram_err <= cfg.tol.velocity_gram;

    for (std::size_t i = 0; i < cfg.profile_points; ++i) {
        const HyperboloidPoint q = random_points(sampler, cfg.n, 1, cfg.radius).front();
        rep.third_derivative_max_err =
            std::max(rep.third_derivative_max_err, third_derivative_check(g, q, cfg.c, cfg.third_step));
    }
    rep.third_derivative_pass = rep.third_derivative_max_err <= cfg.tol.third_derivative;

    rep.gradient_inequality_margin = std::numeric_limits<double>::infinity();
    for (std::size_t trial = 0; trial < cfg.cone_trials; ++trial) {
        const auto sources = random_points(sampler, cfg.n, cfg.cone_sources, cfg.radius);
        std::vector<double> weights(cfg.cone_sources);
        for (auto& w : weights) w = sampler.uniform();
        HyperboloidPoint x = random_points(sampler, cfg.n, 1, cfg.radius).front();
        const double margin = cone_gradient_inequality(sources, weights, x, cfg.fd_step).margin;
        rep.gradient_inequality_margin = std::min(rep.gradient_inequality_margin, margin);
    }
    rep.gradient_inequality_pass = rep.gradient_inequality_margin >= cfg.tol.cone_margin;
    return rep;
}

} // namespace harmonic
