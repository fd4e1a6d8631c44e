#pragma once

/**
 * @file specfun.hpp
 * @brief Sign-aware log-gamma and the generalized falling factorial.
 *
 * The falling factorial is
 *
 *     t^(v) = Gamma(t+1) / Gamma(t+1-v)
 *
 * evaluated through log-magnitudes so that large arguments never overflow.
 * When Gamma(t+1-v) sits on a pole while Gamma(t+1) does not, the ratio is
 * taken to be exactly 0. A pole in the numerator leaves the value undefined.
 */

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracbvp/errors.hpp"

namespace fracbvp {

/// Absolute distance from a nonpositive integer below which an argument is
/// treated as a Gamma pole.
inline constexpr double kPoleTolerance = 1e-12;

/// A real number stored as sign and natural log of its magnitude.
struct SignedLog {
    double log_abs = 0.0;
    int sign = 0;  // -1, 0 or +1; 0 means the value is exactly zero

    static SignedLog from_double(double x) {
        if (x == 0.0) return {0.0, 0};
        return {std::log(std::fabs(x)), x > 0.0 ? 1 : -1};
    }

    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_abs);
    }

    friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.log_abs + b.log_abs, a.sign * b.sign};
    }

    friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
        if (b.sign == 0) throw InvalidArgument("SignedLog: division by zero");
        if (a.sign == 0) return {};
        return {a.log_abs - b.log_abs, a.sign * b.sign};
    }
};

/// True iff x lies within tol of 0, -1, -2, ...
inline bool is_gamma_pole(double x, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("is_gamma_pole: tol must be positive");
    if (x > tol) return false;
    return std::fabs(x - std::round(x)) <= tol;
}

namespace detail {

// sin(pi x) with exact argument reduction to [-1, 1].
inline double sin_pi(double x) {
    const double r = x - 2.0 * std::round(0.5 * x);
    return std::sin(std::numbers::pi * r);
}

// Lanczos approximation, g = 7, nine terms. Valid for x >= 0.5.
inline double lanczos_log_gamma(double x) {
    static constexpr std::array<double, 9> c = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;
    const double z = x - 1.0;
    double series = c[0];
    for (int i = 1; i < 9; ++i) series += c[i] / (z + i);
    const double t = z + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(series);
}

}  // namespace detail

/// Sign and log-magnitude of Gamma(x). Throws PoleError on 0, -1, -2, ...
inline SignedLog log_gamma_signed(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("log_gamma_signed: argument is not finite");
    if (is_gamma_pole(x, kPoleTolerance))
        throw PoleError("Gamma has a pole at x = " + std::to_string(x));
    if (x >= 0.5) return {detail::lanczos_log_gamma(x), 1};

    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    const double s = detail::sin_pi(x);
    return {std::log(std::numbers::pi) - std::log(std::fabs(s)) -
                detail::lanczos_log_gamma(1.0 - x),
            s > 0.0 ? 1 : -1};
}

/// Gamma(x) as a plain double (may overflow to inf for x > ~171).
/// Positive integers go through the factorial product, exact up to 23.
inline double gamma_fn(double x) {
    if (x >= 1.0 && x <= 171.0 && x == std::floor(x)) {
        double p = 1.0;
        for (int i = 2; i < static_cast<int>(x); ++i) p *= i;
        return p;
    }
    return log_gamma_signed(x).to_double();
}

/// Generalized falling factorial t^(v) = Gamma(t+1)/Gamma(t+1-v).
inline double falling_factorial(double t, double v) {
    if (!std::isfinite(t) || !std::isfinite(v))
        throw InvalidArgument("falling_factorial: arguments must be finite");
    const double num = t + 1.0;
    const double den = t + 1.0 - v;
    const bool num_pole = is_gamma_pole(num, kPoleTolerance);
    const bool den_pole = is_gamma_pole(den, kPoleTolerance);
    if (num_pole && den_pole)
        throw UndefinedValue("falling_factorial: both Gamma factors are poles (0/0)");
    if (num_pole) throw UndefinedValue("falling_factorial: Gamma(t+1) is a pole");
    if (den_pole) return 0.0;
    if (v == 0.0) return 1.0;

    // Small nonnegative integer orders: the product is exact for integer t.
    if (v > 0.0 && v <= 64.0 && v == std::floor(v)) {
        double p = 1.0;
        for (int i = 0; i < static_cast<int>(v); ++i) p *= t - i;
        return p;
    }
    return (log_gamma_signed(num) / log_gamma_signed(den)).to_double();
}

}  // namespace fracbvp
