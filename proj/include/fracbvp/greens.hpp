#pragma once

/**
 * @file greens.hpp
 * @brief Green's function of the three-point Caputo BVP of order 2 < v <= 3
 *        and the cone constants derived from it.
 *
 * With alpha(t) = t - v + 3,
 *
 *   Gamma(v) G(t,s) = (v-1) alpha(t) (v+b-s-1)^(v-2) - (t-s-1)^(v-1)   0 <= s < t-v+1
 *   Gamma(v) G(t,s) = (v-1) alpha(t) (v+b-s-1)^(v-2)                   t-v+1 <= s <= b+2
 *
 * for t in {v-3, ..., v+b}. The matrix form keeps rows t = v-2 .. v+b and
 * columns s = 0 .. b+1; the row t = v-3 and column s = b+2 vanish identically.
 *
 * Row indices k below always mean t = v-2+k.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "fracbvp/errors.hpp"
#include "fracbvp/grid.hpp"
#include "fracbvp/linalg.hpp"
#include "fracbvp/specfun.hpp"

namespace fracbvp {

inline void require_bvp_order(double v, long long b) {
    if (!(v > 2.0 && v <= 3.0)) throw InvalidArgument("v must satisfy 2 < v <= 3");
    if (b < 0) throw InvalidArgument("b must be a nonnegative integer");
}

inline double alpha(double t, double v) { return t - v + 3.0; }

namespace detail {

// G at t = v-3+j (j = 0..b+3), s = 0..b+2. Branch selection uses the integer
// seam index j-2 = t-v+1; the seam itself takes the second branch.
inline double greens_at(double v, long long b, long long j, long long s) {
    const double t = v - 3.0 + static_cast<double>(j);
    const double a = alpha(t, v);
    double val = (v - 1.0) * a * falling_factorial(v + static_cast<double>(b - s) - 1.0, v - 2.0);
    if (s < j - 2) val -= falling_factorial(t - static_cast<double>(s) - 1.0, v - 1.0);
    return val / gamma_fn(v);
}

}  // namespace detail

/// G(t,s) for t on {v-3, ..., v+b} and integer s in [0, b+2].
inline double greens_value(double v, long long b, double t, long long s) {
    require_bvp_order(v, b);
    if (s < 0 || s > b + 2) throw InvalidArgument("greens_value: s out of range [0, b+2]");
    const double r = t - (v - 3.0);
    const double j = std::round(r);
    if (std::fabs(r - j) > kOffsetTolerance || j < 0 || j > static_cast<double>(b + 3))
        throw InvalidArgument("greens_value: t is not on the grid {v-3, ..., v+b}");
    return detail::greens_at(v, b, static_cast<long long>(j), s);
}

/// Dense G over t = v-2..v+b (rows) and s = 0..b+1 (columns).
struct GreensMatrix {
    double v = 0.0;
    long long b = 0;
    DenseMatrix values;

    std::size_t rows() const noexcept { return values.rows(); }
    std::size_t cols() const noexcept { return values.cols(); }
    double t_of(std::size_t k) const noexcept { return v - 2.0 + static_cast<double>(k); }
    double operator()(std::size_t k, std::size_t s) const noexcept { return values(k, s); }
    std::size_t top_row() const noexcept { return rows() - 1; }
};

inline GreensMatrix greens_matrix(double v, long long b) {
    require_bvp_order(v, b);
    GreensMatrix g{v, b, DenseMatrix(static_cast<std::size_t>(b + 3), static_cast<std::size_t>(b + 2))};
    for (long long k = 0; k <= b + 2; ++k)
        for (long long s = 0; s <= b + 1; ++s)
            g.values(static_cast<std::size_t>(k), static_cast<std::size_t>(s)) =
                detail::greens_at(v, b, k + 1, s);
    return g;
}

/// Inclusive range of row indices.
struct IndexWindow {
    std::size_t lo = 0;
    std::size_t hi = 0;

    std::size_t size() const noexcept { return hi - lo + 1; }
    bool operator==(const IndexWindow&) const = default;
};

/// Rows k whose point t = v-2+k lies in [(v+b)/4, 3(v+b)/4].
inline IndexWindow cone_window(double v, long long b) {
    require_bvp_order(v, b);
    const double lo_t = (v + static_cast<double>(b)) / 4.0;
    const double hi_t = 3.0 * (v + static_cast<double>(b)) / 4.0;
    const double lo = std::max(0.0, std::ceil(lo_t - (v - 2.0) - kOffsetTolerance));
    const double hi = std::min(static_cast<double>(b + 2), std::floor(hi_t - (v - 2.0) + kOffsetTolerance));
    if (lo > hi)
        throw EmptyWindow("cone window [" + std::to_string(lo_t) + ", " + std::to_string(hi_t) +
                          "] contains no grid point");
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

/// Columns s in [ceil((b+v)/4 - v + 1), floor(3(b+v)/4 - v + 1)] clamped to [0, b+1].
inline IndexWindow rho_window(double v, long long b) {
    require_bvp_order(v, b);
    const double bv = static_cast<double>(b) + v;
    const double lo = std::max(0.0, std::ceil(bv / 4.0 - v + 1.0 - kOffsetTolerance));
    const double hi =
        std::min(static_cast<double>(b + 1), std::floor(3.0 * bv / 4.0 - v + 1.0 + kOffsetTolerance));
    if (lo > hi) throw EmptyWindow("rho summation window is empty");
    return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

/// Smallest ratio min_{k in window} G(k,s) / G(v+b,s) over all columns s.
inline double compute_gamma(const GreensMatrix& g, const IndexWindow& window) {
    if (window.hi >= g.rows() || window.lo > window.hi)
        throw EmptyWindow("compute_gamma: window outside the matrix");
    double gamma = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < g.cols(); ++s) {
        const double top = g(g.top_row(), s);
        if (top <= 1e-14)
            throw DegenerateColumn("compute_gamma: G(v+b, " + std::to_string(s) + ") is not positive");
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t k = window.lo; k <= window.hi; ++k) m = std::min(m, g(k, s));
        gamma = std::min(gamma, m / top);
    }
    return gamma;
}

/// alpha at the first window point divided by max alpha = b+3.
inline double compute_a_alpha(double v, long long b, const IndexWindow& window) {
    require_bvp_order(v, b);
    if (window.lo > window.hi || window.hi > static_cast<std::size_t>(b + 2))
        throw EmptyWindow("compute_a_alpha: empty window");
    return alpha(v - 2.0 + static_cast<double>(window.lo), v) / static_cast<double>(b + 3);
}

struct ConeConstants {
    double gamma = 0.0;
    double a_alpha = 0.0;
    double gamma_bar = 0.0;
    IndexWindow window;
};

inline ConeConstants cone_constants(const GreensMatrix& g) {
    ConeConstants cc;
    cc.window = cone_window(g.v, g.b);
    cc.gamma = compute_gamma(g, cc.window);
    cc.a_alpha = compute_a_alpha(g.v, g.b, cc.window);
    cc.gamma_bar = std::min(cc.gamma, cc.a_alpha);
    return cc;
}

namespace detail {

inline void check_forcing(const GreensMatrix& g, const GridFn& h) {
    if (h.size() != g.cols())
        throw InvalidArgument("forcing must have b+2 samples h(s+v-1), s = 0..b+1; got " +
                              std::to_string(h.size()));
    if (std::fabs(h.offset() - (g.v - 1.0)) > kOffsetTolerance)
        throw InvalidArgument("forcing must be sampled on v-1, v, ..., v+b");
}

}  // namespace detail

/// Row sums sum_s G(t,s) h(s+v-1) for every row t = v-2..v+b.
inline std::vector<double> greens_apply(const GreensMatrix& g, const GridFn& h) {
    detail::check_forcing(g, h);
    std::vector<double> out(g.rows(), 0.0);
    for (std::size_t k = 0; k < g.rows(); ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < g.cols(); ++s) acc += g(k, s) * h[s];
        out[k] = acc;
    }
    return out;
}

/// eta = 2 max_t sum_s G(t,s) h(s+v-1), for h >= 0.
inline double compute_eta(const GreensMatrix& g, const GridFn& h) {
    const auto sums = greens_apply(g, h);
    for (double x : h.values())
        if (x < 0.0) throw InvalidArgument("compute_eta: h must be nonnegative");
    const auto it = std::max_element(sums.begin(), sums.end());
    // Column-wise row dominance makes the last row the largest.
    if (*it > sums.back() * (1.0 + 1e-12) + 1e-300)
        throw Error("compute_eta: maximal row is not t = v+b");
    return 2.0 * sums.back();
}

/// rho = min_t sum_{s in rho window} G(t,s) h(s+v-1).
inline double compute_rho(const GreensMatrix& g, const GridFn& h) {
    detail::check_forcing(g, h);
    const IndexWindow w = rho_window(g.v, g.b);
    double rho = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < g.rows(); ++k) {
        double acc = 0.0;
        for (std::size_t s = w.lo; s <= w.hi; ++s) acc += g(k, s) * h[s];
        rho = std::min(rho, acc);
    }
    return rho;
}

}  // namespace fracbvp
