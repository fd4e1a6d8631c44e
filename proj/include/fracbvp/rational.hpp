#pragma once

// Exact rationals for user-facing numbers such as v = 8/3, so that grid
// points like v-2+k can be printed without rounding.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "fracbvp/errors.hpp"

namespace fracbvp {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (d == 0) throw InvalidArgument("Rational: zero denominator");
        normalize();
    }

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    bool operator==(const Rational&) const = default;

private:
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

/// A number read from user input: its double value, plus the exact
/// rational when the text was an integer or an "a/b" fraction.
struct ExactNumber {
    double value = 0.0;
    std::optional<Rational> exact;
};

namespace detail {

inline std::optional<std::int64_t> parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace detail

/// Parse "8/3", "-1/6", "3" (exact) or "2.5", "1e-3" (decimal).
inline ExactNumber parse_number(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto n = detail::parse_int(text.substr(0, slash));
        const auto d = detail::parse_int(text.substr(slash + 1));
        if (!n || !d) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
        if (*d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        const Rational r(*n, *d);
        return {r.to_double(), r};
    }
    if (const auto n = detail::parse_int(text)) return {static_cast<double>(*n), Rational(*n)};

    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
        throw InvalidArgument("malformed number '" + std::string(text) + "'");
    return {v, std::nullopt};
}

}  // namespace fracbvp
