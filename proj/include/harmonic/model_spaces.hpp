#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic/error.hpp"

namespace harmonic {

/// Coordinate type. Points far from the basepoint have x0 ~ e^d, and one
/// ulp of x0 moves the point by about x0^2 * eps in hyperbolic distance, so
/// doubles cannot hold unit speed to 1e-10 out to |t| = 10.
using Coord = long double;

/// A vector (x0, x1, ..., xn) in Minkowski space R^{n,1}.
struct MinkowskiVector {
    std::vector<Coord> coords;

    MinkowskiVector() = default;
    explicit MinkowskiVector(std::vector<Coord> c) : coords(std::move(c)) {}
    explicit MinkowskiVector(const std::vector<double>& c) : coords(c.begin(), c.end()) {}
    MinkowskiVector(std::initializer_list<Coord> c) : coords(c) {}

    [[nodiscard]] std::size_t size() const { return coords.size(); }
    /// Dimension of the hyperbolic space this vector lives over.
    [[nodiscard]] std::size_t dimension() const { return coords.empty() ? 0 : coords.size() - 1; }
    Coord& operator[](std::size_t i) { return coords[i]; }
    Coord operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const MinkowskiVector&, const MinkowskiVector&) = default;
};

inline MinkowskiVector axpby(Coord a, const MinkowskiVector& x, Coord b, const MinkowskiVector& y)
{
    MinkowskiVector out(std::vector<Coord>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
    return out;
}

/// Q(x, y) = -x0 y0 + sum_{i>=1} xi yi.
inline Coord minkowski_form(const MinkowskiVector& x, const MinkowskiVector& y)
{
    if (x.size() != y.size() || x.size() == 0) {
        throw std::invalid_argument("minkowski_form: dimension mismatch (" + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + ")");
    }
    Coord sum = -x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) sum += x[i] * y[i];
    return sum;
}

/// Tolerance for |Q(x,x) + 1|, scaled with x0^2 since Q is evaluated by
/// cancelling terms of that size.
inline double sheet_tolerance(double x0) { return 1e-12 * std::max(1.0, x0 * x0); }

/// A point on the upper sheet Q(x, x) = -1, x0 >= 1.
class HyperboloidPoint {
public:
    HyperboloidPoint() = default;

    /// Validates the sheet condition.
    explicit HyperboloidPoint(MinkowskiVector v) : vec_(std::move(v))
    {
        if (vec_.size() < 2) {
            throw std::invalid_argument("HyperboloidPoint: need at least 2 coordinates");
        }
        for (Coord x : vec_.coords) {
            if (!std::isfinite(x)) throw std::invalid_argument("HyperboloidPoint: non-finite coordinate");
        }
        const auto defect = static_cast<double>(std::abs(minkowski_form(vec_, vec_) + 1));
        if (vec_[0] < 1.0 - 1e-12 || defect > sheet_tolerance(vec_[0])) {
            throw std::invalid_argument("HyperboloidPoint: not on the upper sheet (Q+1 = " +
                                        std::to_string(defect) + ")");
        }
    }

    /// Lift spatial coordinates X to (sqrt(1 + |X|^2), X).
    static HyperboloidPoint lift(std::span<const double> spatial)
    {
        Coord norm2 = 0;
        for (Coord x : spatial) norm2 += x * x;
        std::vector<Coord> coords;
        coords.reserve(spatial.size() + 1);
        coords.push_back(std::sqrt(1 + norm2));
        coords.insert(coords.end(), spatial.begin(), spatial.end());
        return HyperboloidPoint(MinkowskiVector(std::move(coords)));
    }

    static HyperboloidPoint basepoint(std::size_t n)
    {
        std::vector<Coord> coords(n + 1, 0.0L);
        coords[0] = 1.0;
        return HyperboloidPoint(MinkowskiVector(std::move(coords)));
    }

    [[nodiscard]] const MinkowskiVector& vec() const { return vec_; }
    [[nodiscard]] std::size_t dimension() const { return vec_.dimension(); }
    Coord operator[](std::size_t i) const { return vec_[i]; }

    friend bool operator==(const HyperboloidPoint&, const HyperboloidPoint&) = default;

private:
    MinkowskiVector vec_;
};

/// Hyperbolic distance. Evaluated as 2 asinh(|p - q|_Q / 2), which equals
/// arccosh(-Q(p, q)) but keeps full precision for nearby points.
inline double distance(const HyperboloidPoint& p, const HyperboloidPoint& q)
{
    const MinkowskiVector diff = axpby(1.0, p.vec(), -1.0, q.vec());
    const Coord chord2 = std::max(minkowski_form(diff, diff), Coord(0));
    return static_cast<double>(2 * std::asinh(std::sqrt(chord2) / 2));
}

/// cosh d(p, q) = -Q(p, q), clamped below at 1.
inline double cosh_distance(const HyperboloidPoint& p, const HyperboloidPoint& q)
{
    return static_cast<double>(std::max(-minkowski_form(p.vec(), q.vec()), Coord(1)));
}

/// Unit-speed geodesic t -> cosh t * base + sinh t * tangent.
struct GeodesicH {
    HyperboloidPoint base;
    MinkowskiVector tangent;

    void validate() const
    {
        const Coord tol = 1e-12L * std::max(Coord(1), base[0] * base[0]);
        if (std::abs(minkowski_form(base.vec(), tangent)) > tol ||
            std::abs(minkowski_form(tangent, tangent) - 1.0) > tol) {
            throw std::invalid_argument("GeodesicH: tangent must be Q-orthogonal to base with Q(v,v) = 1");
        }
    }
};

/// Project `direction` onto the tangent space at `base` and normalize.
inline GeodesicH make_geodesic(const HyperboloidPoint& base, const MinkowskiVector& direction)
{
    const MinkowskiVector v = axpby(1.0, direction, minkowski_form(direction, base.vec()), base.vec());
    const Coord norm2 = minkowski_form(v, v);
    if (!(norm2 > 0)) {
        throw std::invalid_argument("make_geodesic: direction has no tangential component");
    }
    GeodesicH g{base, axpby(1 / std::sqrt(norm2), v, 0, v)};
    g.validate();
    return g;
}

inline HyperboloidPoint geodesic_point(const GeodesicH& g, double t)
{
    const Coord tt = t;
    return HyperboloidPoint(axpby(std::cosh(tt), g.base.vec(), std::sinh(tt), g.tangent));
}

/// Q-orthonormal basis of the tangent space at x (Gram-Schmidt on the
/// projected coordinate axes e_1, ..., e_n).
inline std::vector<MinkowskiVector> tangent_frame(const HyperboloidPoint& x)
{
    const std::size_t n = x.dimension();
    std::vector<MinkowskiVector> frame;
    frame.reserve(n);
    for (std::size_t axis = 1; axis <= n; ++axis) {
        MinkowskiVector e(std::vector<Coord>(n + 1, 0.0L));
        e[axis] = 1;
        MinkowskiVector v = axpby(1.0, e, minkowski_form(e, x.vec()), x.vec());
        for (const auto& u : frame) v = axpby(1.0, v, -minkowski_form(v, u), u);
        const Coord norm2 = minkowski_form(v, v);
        frame.push_back(axpby(1 / std::sqrt(norm2), v, 0, v));
    }
    return frame;
}

/// Parameters s_1 < ... < s_m on an abstract unit-speed geodesic line;
/// d(i, j) = |s_i - s_j| in any Riemannian manifold.
struct LineConfig {
    std::vector<double> parameters;

    explicit LineConfig(std::vector<double> s) : parameters(std::move(s))
    {
        for (std::size_t i = 1; i < parameters.size(); ++i) {
            if (!(parameters[i] > parameters[i - 1])) {
                throw std::invalid_argument("LineConfig: parameters must be strictly increasing");
            }
        }
    }

    /// m equally spaced parameters on [lo, hi].
    static LineConfig uniform(std::size_t m, double lo, double hi)
    {
        std::vector<double> s(m);
        for (std::size_t i = 0; i < m; ++i) {
            s[i] = m == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1);
        }
        return LineConfig(std::move(s));
    }

    [[nodiscard]] std::size_t size() const { return parameters.size(); }
    [[nodiscard]] double distance(std::size_t i, std::size_t j) const
    {
        return std::abs(parameters[i] - parameters[j]);
    }
};

/// Deterministic point stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; uniforms and normals are derived from
/// raw engine output here (not via <random> distributions, which are
/// implementation-defined) so a seed reproduces the same bits everywhere.
class SeededSampler {
public:
    explicit SeededSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    [[nodiscard]] std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1].
    double uniform_open() { return 1.0 - uniform(); }

    /// Standard normal by Box-Muller (one value per call, the sine branch is discarded).
    double normal()
    {
        const double u1 = uniform_open();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// m points of H^n within distance `radius` of the basepoint: spatial part
/// uniform in the Euclidean ball of radius sinh(radius), then lifted.
inline std::vector<HyperboloidPoint> random_points(SeededSampler& sampler, std::size_t n, std::size_t m,
                                                   double radius)
{
    if (n < 1 || m < 1) {
        throw std::invalid_argument("random_points: need n >= 1 and m >= 1");
    }
    if (!(radius > 0.0)) {
        throw std::invalid_argument("random_points: radius must be > 0");
    }
    const double ball = std::sinh(radius);
    std::vector<HyperboloidPoint> points;
    points.reserve(m);
    std::vector<double> x(n);
    for (std::size_t k = 0; k < m; ++k) {
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& xi : x) {
                xi = sampler.normal();
                norm2 += xi * xi;
            }
        } while (norm2 == 0.0);
        const double scale = ball * std::pow(sampler.uniform(), 1.0 / static_cast<double>(n)) / std::sqrt(norm2);
        for (auto& xi : x) xi *= scale;
        points.push_back(HyperboloidPoint::lift(x));
    }
    return points;
}

/// One CSV row per point, columns x0..xn.
inline void write_points_csv(std::ostream& os, std::span<const HyperboloidPoint> points)
{
    if (points.empty()) return;
    const std::size_t cols = points.front().vec().size();
    for (std::size_t i = 0; i < cols; ++i) os << (i ? ",x" : "x") << i;
    os << '\n';
    char buf[32];
    for (const auto& p : points) {
        for (std::size_t i = 0; i < cols; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(p[i]));
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
}

struct FootProfile {
    double rho = 0.0;  // distance from q to the geodesic
    double t0 = 0.0;   // parameter of the foot of the perpendicular
};

/// cosh d(gamma(t), q) = A cosh t + B sinh t with A = -Q(base, q) and
/// B = -Q(tangent, q); matching cosh(rho) cosh(t - t0) gives tanh t0 = -B / A,
/// and rho is the distance from q to gamma(t0).
inline FootProfile foot_distance_profile(const GeodesicH& g, const HyperboloidPoint& q)
{
    const Coord a = -minkowski_form(g.base.vec(), q.vec());
    const Coord b = -minkowski_form(g.tangent, q.vec());
    FootProfile out;
    out.t0 = static_cast<double>(std::atanh(-b / a));
    out.rho = distance(geodesic_point(g, out.t0), q);
    const double cosh_rho = std::cosh(out.rho);

    for (double dt : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
        const double t = out.t0 + dt;
        const double direct = cosh_distance(geodesic_point(g, t), q);
        const double model = cosh_rho * std::cosh(dt);
        if (std::abs(direct - model) > 1e-9 * std::max(1.0, direct)) {
            throw VerificationError("foot_distance_profile: profile does not fit at t = " + std::to_string(t));
        }
    }
    return out;
}

} // namespace harmonic
