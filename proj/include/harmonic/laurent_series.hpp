#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "harmonic/rational.hpp"

namespace harmonic {

/// An odd function with at most a simple pole at the origin:
///   pole / r + odd[0] r + odd[1] r^3 + odd[2] r^5 + ...
/// Coefficients are exact; the series is truncated at a fixed order.
struct LaurentSeries {
    Rational pole;
    std::vector<Rational> odd_coefficients;

    [[nodiscard]] Rational coefficient_of_r() const
    {
        return odd_coefficients.empty() ? Rational{} : odd_coefficients.front();
    }

    /// Highest power of r carried.
    [[nodiscard]] std::size_t order() const
    {
        return odd_coefficients.empty() ? 0 : 2 * odd_coefficients.size() - 1;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
    {
        LaurentSeries out;
        out.pole = a.pole + b.pole;
        const std::size_t len = std::max(a.odd_coefficients.size(), b.odd_coefficients.size());
        out.odd_coefficients.assign(len, Rational{});
        for (std::size_t i = 0; i < a.odd_coefficients.size(); ++i) out.odd_coefficients[i] += a.odd_coefficients[i];
        for (std::size_t i = 0; i < b.odd_coefficients.size(); ++i) out.odd_coefficients[i] += b.odd_coefficients[i];
        return out;
    }

    friend LaurentSeries operator*(const Rational& s, const LaurentSeries& a)
    {
        LaurentSeries out;
        out.pole = s * a.pole;
        out.odd_coefficients.reserve(a.odd_coefficients.size());
        for (const auto& c : a.odd_coefficients) out.odd_coefficients.push_back(s * c);
        return out;
    }

    [[nodiscard]] double evaluate(double r) const
    {
        double sum = 0.0;
        double power = r;
        const double r2 = r * r;
        for (const auto& c : odd_coefficients) {
            sum += c.to_double() * power;
            power *= r2;
        }
        return pole.to_double() / r + sum;
    }
};

namespace series {

// coth r = 1/r + r/3 - r^3/45 + 2 r^5/945 - r^7/4725 + 2 r^9/93555 - ...
inline LaurentSeries coth()
{
    return {Rational(1),
            {Rational(1, 3), Rational(-1, 45), Rational(2, 945), Rational(-1, 4725), Rational(2, 93555)}};
}

// csch r = 1/r - r/6 + 7 r^3/360 - 31 r^5/15120 + 127 r^7/604800 - 73 r^9/3421440 - ...
inline LaurentSeries csch()
{
    return {Rational(1),
            {Rational(-1, 6), Rational(7, 360), Rational(-31, 15120), Rational(127, 604800),
             Rational(-73, 3421440)}};
}

inline LaurentSeries inverse_r() { return {Rational(1), {}}; }

/// Even-index Bernoulli numbers B_0, B_2, ..., B_30.
inline const std::array<Rational, 16>& bernoulli_even()
{
    static const std::array<Rational, 16> table = {
        Rational(1),
        Rational(1, 6),
        Rational(-1, 30),
        Rational(1, 42),
        Rational(-1, 30),
        Rational(5, 66),
        Rational(-691, 2730),
        Rational(7, 6),
        Rational(-3617, 510),
        Rational(43867, 798),
        Rational(-174611, 330),
        Rational(854513, 138),
        Rational(-236364091, 2730),
        Rational(8553103, 6),
        Rational(-23749461029LL, 870),
        Rational(8615841276005LL, 14322),
    };
    return table;
}

} // namespace series

} // namespace harmonic
