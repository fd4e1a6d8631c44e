#pragma once

/**
 * @file fracops.hpp
 * @brief Fractional sums and Caputo fractional differences on shifted grids.
 *
 * For f on N_a and v > 0 the v-th fractional sum is
 *
 *     (Delta^{-v} f)(t) = 1/Gamma(v) * sum_{s=a}^{t-v} (t-s-1)^(v-1) f(s),   t in N_{a+v}
 *
 * and with n = ceil(v) the Caputo difference is Delta^{-(n-v)} applied to the
 * n-th forward difference, living on N_{a+n-v}. At integer order (v == n)
 * the Caputo difference is just Delta^n f.
 */

#include <cmath>
#include <vector>

#include "fracbvp/errors.hpp"
#include "fracbvp/grid.hpp"
#include "fracbvp/specfun.hpp"

namespace fracbvp {

/// A positive order v together with n = ceil(v), so that n-1 < v <= n.
struct FracOrder {
    double v;
    int n;

    explicit FracOrder(double order) : v(order) {
        if (!(order > 0.0) || !std::isfinite(order))
            throw InvalidArgument("fractional order must be a finite v > 0");
        n = static_cast<int>(std::ceil(order));
    }

    bool is_integer() const noexcept { return v == static_cast<double>(n); }
};

/// Weight of f(a+j) in the fractional sum evaluated at t = a+v+k:
/// (v+k-j-1)^(v-1) / Gamma(v).
inline double frac_sum_weight(double v, std::size_t k, std::size_t j) {
    const double d = static_cast<double>(k) - static_cast<double>(j);
    return falling_factorial(v + d - 1.0, v - 1.0) / gamma_fn(v);
}

/// v-th fractional sum; output point k uses input points 0..k.
inline GridFn frac_sum(const GridFn& f, double v) {
    if (!(v > 0.0)) throw InvalidArgument("frac_sum: order must be positive");
    const std::size_t m = f.size();
    const double inv_gamma = 1.0 / gamma_fn(v);

    // The kernel depends only on k - j.
    std::vector<double> kernel(m);
    for (std::size_t d = 0; d < m; ++d)
        kernel[d] = falling_factorial(v + static_cast<double>(d) - 1.0, v - 1.0) * inv_gamma;

    std::vector<double> out(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) acc += kernel[k - j] * f[j];
        out[k] = acc;
    }
    return GridFn(ShiftedGrid(f.offset() + v, m), std::move(out));
}

/// v-th Caputo fractional difference; output on N_{a+n-v} with count - n points.
inline GridFn caputo_diff(const GridFn& f, double v) {
    const FracOrder ord(v);
    if (f.size() <= static_cast<std::size_t>(ord.n))
        throw InvalidArgument("caputo_diff: need more than n = " + std::to_string(ord.n) +
                              " points");
    GridFn dn = delta(f, static_cast<std::size_t>(ord.n));
    if (ord.is_integer()) return dn;
    return frac_sum(dn, ord.n - ord.v);
}

}  // namespace fracbvp
