#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonic {

/// Exact rational number over 64-bit integers, always kept in lowest terms
/// with a positive denominator. Intermediates are formed in 128 bits and any
/// result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type value) : num_(value) {}  // NOLINT(implicit)

    Rational(int_type num, int_type den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        assign(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    [[nodiscard]] constexpr int_type num() const { return num_; }
    [[nodiscard]] constexpr int_type den() const { return den_; }

    [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }
    [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
    [[nodiscard]] constexpr int sign() const { return (num_ > 0) - (num_ < 0); }

    [[nodiscard]] double to_double() const
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    [[nodiscard]] long double to_long_double() const
    {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    /// "p/q", or just "p" when the denominator is one.
    [[nodiscard]] std::string to_string() const
    {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "a/b", integers, and decimals such as "-1.25" or "2.5e-3".
    /// Decimals are converted exactly: 0.1 becomes 1/10.
    static Rational parse(std::string_view text);

    Rational operator-() const
    {
        Rational r;
        r.assign(-static_cast<__int128>(num_), den_);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        const __int128 g = std::gcd(a.den_, b.den_);
        const __int128 da = a.den_ / g;
        const __int128 db = b.den_ / g;
        Rational r;
        r.assign(static_cast<__int128>(a.num_) * db + static_cast<__int128>(b.num_) * da,
                 da * b.den_);
        return r;
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        Rational r;
        r.assign(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        Rational r;
        r.assign(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r)
    {
        return os << r.to_string();
    }

private:
    static __int128 gcd128(__int128 a, __int128 b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign(__int128 num, __int128 den)
    {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr __int128 lo = INT64_MIN;
        constexpr __int128 hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) {
            throw std::overflow_error("Rational: result exceeds 64-bit range");
        }
        num_ = static_cast<int_type>(num);
        den_ = num == 0 ? 1 : static_cast<int_type>(den);
    }

    int_type num_ = 0;
    int_type den_ = 1;
};

namespace detail {

inline Rational::int_type parse_int(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw std::invalid_argument("Rational: malformed number '" + std::string(whole) + "'");
    }
    __int128 value = 0;
    for (char ch : digits) {
        if (ch < '0' || ch > '9') {
            throw std::invalid_argument("Rational: malformed number '" + std::string(whole) + "'");
        }
        value = value * 10 + (ch - '0');
        if (value > INT64_MAX) {
            throw std::overflow_error("Rational: literal too large '" + std::string(whole) + "'");
        }
    }
    return static_cast<Rational::int_type>(value);
}

inline Rational pow10(int exponent)
{
    Rational r(1);
    const Rational ten(10);
    for (int i = 0; i < exponent; ++i) {
        r *= ten;
    }
    return r;
}

} // namespace detail

inline Rational Rational::parse(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse(text.substr(0, slash));
        const Rational den = parse(text.substr(slash + 1));
        if (den.is_zero()) {
            throw std::invalid_argument("Rational: zero denominator in '" + std::string(whole) + "'");
        }
        return num / den;
    }

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    int exponent = 0;
    if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        const auto magnitude = detail::parse_int(exp_text, whole);
        if (magnitude > 18) {
            throw std::overflow_error("Rational: exponent out of range in '" + std::string(whole) + "'");
        }
        exponent = exp_negative ? -static_cast<int>(magnitude) : static_cast<int>(magnitude);
        text = text.substr(0, e);
    }

    std::string digits;
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) {
            throw std::invalid_argument("Rational: malformed number '" + std::string(whole) + "'");
        }
        digits.append(int_part);
        digits.append(frac_part);
        exponent -= static_cast<int>(frac_part.size());
    } else {
        digits.append(text);
    }

    Rational value(detail::parse_int(digits, whole));
    if (exponent > 0) {
        value *= detail::pow10(exponent);
    } else if (exponent < 0) {
        value /= detail::pow10(-exponent);
    }
    return negative ? -value : value;
}

} // namespace harmonic
