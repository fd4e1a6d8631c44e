#pragma once

/**
 * @file bvp.hpp
 * @brief The nonlocal Caputo boundary value problem
 *
 *     Delta_C^v y(t) = -lambda h(t+v-1) g(y(t+v-1)),   t = 0..b+1
 *     y(v-3) = 0,   Delta y(v+b) = phi(y),   Delta^2 y(v-3) = 0
 *
 * with phi(y) = sum_k c_k/(b+3) y(v-3+k). Solutions live on N_{v-3}; the
 * working state holds the b+4 points v-3..v+b and the boundary condition on
 * Delta y(v+b) adds one more point, v+b+1.
 *
 * Two independent linear solvers are provided: a dense assembly of the
 * difference equations (the oracle) and the Green's function representation.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fracbvp/errors.hpp"
#include "fracbvp/expr.hpp"
#include "fracbvp/fracops.hpp"
#include "fracbvp/greens.hpp"
#include "fracbvp/grid.hpp"
#include "fracbvp/linalg.hpp"
#include "fracbvp/specfun.hpp"

namespace fracbvp {

struct ProblemSpec {
    double v;
    long long b;
    double lambda;
    Expr h;                           // in t
    Expr g;                           // in y
    std::vector<double> phi_coeffs;   // c_0 .. c_{b+3}

    ProblemSpec(double v_, long long b_, double lambda_, Expr h_, Expr g_, std::vector<double> phi)
        : v(v_), b(b_), lambda(lambda_), h(std::move(h_)), g(std::move(g_)), phi_coeffs(std::move(phi)) {
        require_bvp_order(v, b);
        if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be positive");
        if (phi_coeffs.size() != static_cast<std::size_t>(b + 4))
            throw InvalidArgument("phi_coeffs must have b+4 entries");
        for (double c : phi_coeffs)
            if (!std::isfinite(c)) throw InvalidArgument("phi_coeffs must be finite");
    }

    /// Weight of y(v-3+k) in phi.
    double phi_weight(std::size_t k) const { return phi_coeffs[k] / static_cast<double>(b + 3); }

    std::size_t state_size() const noexcept { return static_cast<std::size_t>(b + 4); }
    std::size_t extended_size() const noexcept { return static_cast<std::size_t>(b + 5); }
    std::size_t forcing_size() const noexcept { return static_cast<std::size_t>(b + 2); }

    ShiftedGrid state_grid() const { return ShiftedGrid(v - 3.0, state_size()); }
    ShiftedGrid extended_grid() const { return ShiftedGrid(v - 3.0, extended_size()); }
    ShiftedGrid forcing_grid() const { return ShiftedGrid(v - 1.0, forcing_size()); }

    bool operator==(const ProblemSpec& o) const {
        return v == o.v && b == o.b && lambda == o.lambda && h == o.h && g == o.g &&
               phi_coeffs == o.phi_coeffs;
    }
};

/// h(s+v-1) for s = 0..b+1.
inline GridFn sample_forcing(const ProblemSpec& spec) {
    return GridFn::sample(spec.forcing_grid(), [&](double t) { return eval(spec.h, t); });
}

/// alpha(t) = t-v+3 on the state grid; alpha(v-3+k) = k.
inline GridFn alpha_fn(const ProblemSpec& spec) {
    return GridFn::sample(spec.state_grid(), [&](double t) { return alpha(t, spec.v); });
}

namespace detail {

inline void require_state(const ProblemSpec& spec, const GridFn& y, const char* who) {
    if (y.size() < spec.state_size() || std::fabs(y.offset() - (spec.v - 3.0)) > kOffsetTolerance)
        throw InvalidArgument(std::string(who) + ": y must live on v-3, ..., v+b (b+4 points)");
}

inline double phi_of(const ProblemSpec& spec, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t k = 0; k < spec.state_size(); ++k) acc += spec.phi_weight(k) * y[k];
    return acc;
}

inline double sup_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

/// Norm of the Banach space: max |y| over v-2..v+b (state indices 1..b+3).
inline double state_norm(std::span<const double> y, std::size_t state_size) {
    return sup_abs(y.subspan(1, state_size - 1));
}

/// lambda h(s+v-1) g(y(s+v-1)) for s = 0..b+1.
inline std::vector<double> nonlinear_forcing(const ProblemSpec& spec, std::span<const double> hs,
                                             std::span<const double> y) {
    std::vector<double> f(spec.forcing_size());
    for (std::size_t s = 0; s < f.size(); ++s) f[s] = spec.lambda * hs[s] * eval(spec.g, y[s + 2]);
    return f;
}

// y(t) = w(t) + alpha(t) * phi, w = G f, on the state grid.
inline std::vector<double> greens_state(const GreensMatrix& gm, std::span<const double> f, double phi) {
    std::vector<double> y(gm.rows() + 1, 0.0);
    for (std::size_t k = 0; k < gm.rows(); ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < gm.cols(); ++s) acc += gm(k, s) * f[s];
        y[k + 1] = acc + static_cast<double>(k + 1) * phi;
    }
    return y;
}

/// Value at t = v+b+1 from the closed-form general solution
///   y(t) = -1/Gamma(v) sum_{s=0}^{t-v} (t-s-1)^(v-1) f_s + C1 + C2 t,  C1 = -(v-3) C2,
///   C2 = 1/Gamma(v-1) sum_{s=0}^{b+1} (v+b-s-1)^(v-2) f_s + phi(y).
inline double extension_value(double v, long long b, std::span<const double> f, double phi) {
    double c2 = 0.0;
    double tail = 0.0;
    for (long long s = 0; s <= b + 1; ++s) {
        const double fs = f[static_cast<std::size_t>(s)];
        c2 += falling_factorial(v + static_cast<double>(b - s) - 1.0, v - 2.0) * fs;
        tail += falling_factorial(v + static_cast<double>(b - s), v - 1.0) * fs;
    }
    c2 = c2 / gamma_fn(v - 1.0) + phi;
    return -tail / gamma_fn(v) + c2 * static_cast<double>(b + 4);
}

/// Max defect of the difference equation and the three boundary conditions
/// for given right-hand-side magnitudes f_s (Delta_C^v y(s) = -f_s).
inline double residual(const ProblemSpec& spec, const GridFn& y_ext, std::span<const double> f) {
    const GridFn cd = caputo_diff(y_ext, spec.v);
    double r = 0.0;
    for (std::size_t t = 0; t < spec.forcing_size(); ++t) r = std::max(r, std::fabs(cd[t] + f[t]));
    const std::size_t n = spec.state_size();
    r = std::max(r, std::fabs(y_ext[0]));
    r = std::max(r, std::fabs(y_ext[2] - 2.0 * y_ext[1] + y_ext[0]));
    r = std::max(r, std::fabs(y_ext[n] - y_ext[n - 1] - phi_of(spec, y_ext.values())));
    return r;
}

inline void require_extended(const ProblemSpec& spec, const GridFn& y_ext) {
    if (y_ext.size() != spec.extended_size() ||
        std::fabs(y_ext.offset() - (spec.v - 3.0)) > kOffsetTolerance)
        throw InvalidArgument("verify_solution: y must live on v-3, ..., v+b+1 (b+5 points)");
}

}  // namespace detail

/// phi(y) = sum_k c_k/(b+3) y(v-3+k).
inline double phi_eval(const GridFn& y, const ProblemSpec& spec) {
    detail::require_state(spec, y, "phi_eval");
    return detail::phi_of(spec, y.values());
}

/// (Fy)(t) = lambda sum_s G(t,s) h(s+v-1) g(y(s+v-1)) + alpha(t) phi(y), on v-3..v+b.
inline GridFn apply_operator_F(const GridFn& y, const ProblemSpec& spec, const GreensMatrix& gm) {
    detail::require_state(spec, y, "apply_operator_F");
    const GridFn hs = sample_forcing(spec);
    const auto f = detail::nonlinear_forcing(spec, hs.values(), y.values());
    return GridFn(spec.state_grid(), detail::greens_state(gm, f, detail::phi_of(spec, y.values())));
}

/// Membership in the cone: strict positivity on v-2..v+b, window minimum at
/// least gamma_bar times the norm, and phi(y) >= 0 (each up to 1e-12,
/// scaled by max(1, ||y||)).
inline bool cone_contains(const GridFn& y, const ConeConstants& cc, const ProblemSpec& spec) {
    detail::require_state(spec, y, "cone_contains");
    const std::size_t n = spec.state_size();
    const double norm = detail::state_norm(y.values(), n);
    const double tol = 1e-12 * std::max(1.0, norm);
    double window_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < n; ++j)
        if (!(y[j] > 0.0)) return false;
    for (std::size_t k = cc.window.lo; k <= cc.window.hi; ++k) window_min = std::min(window_min, y[k + 1]);
    if (window_min < cc.gamma_bar * norm - tol) return false;
    return phi_eval(y, spec) >= -tol;
}

// ---------------------------------------------------------------------------
// Hypothesis checks
// ---------------------------------------------------------------------------

enum class GrowthClass { F2Like, F3Like, Inconclusive };

inline const char* to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::F2Like: return "F2-like";
        case GrowthClass::F3Like: return "F3-like";
        default: return "inconclusive";
    }
}

struct GrowthSample {
    double y;
    double ratio;  // g(y)/y; NaN when g has a pole or overflows at y
    bool pole;
};

struct ConditionReport {
    bool g1_linear = true;
    bool g2_nonneg = false;
    double g2_min = 0.0;  // min over s of sum_k c_k/(b+3) G(v-3+k, s)
    double g2_sum = 0.0;
    bool g2_sum_ok = false;
    double g3_phi_alpha = 0.0;
    bool g3_ok = false;
    GrowthClass f_class = GrowthClass::Inconclusive;
    bool pole_adjacent = false;
    std::vector<GrowthSample> samples;

    bool hypotheses_ok() const { return g1_linear && g2_nonneg && g2_sum_ok && g3_ok; }
};

namespace detail {

// +1 strictly increasing, -1 strictly decreasing, 0 otherwise; needs >= 2 values.
inline int trend(const std::vector<double>& r) {
    if (r.size() < 2) return 0;
    bool inc = true;
    bool dec = true;
    for (std::size_t i = 1; i < r.size(); ++i) {
        inc = inc && r[i] > r[i - 1];
        dec = dec && r[i] < r[i - 1];
    }
    return inc ? 1 : (dec ? -1 : 0);
}

}  // namespace detail

inline ConditionReport check_conditions(const ProblemSpec& spec, const GreensMatrix& gm) {
    ConditionReport rep;
    const std::size_t n = spec.state_size();

    rep.g2_min = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < gm.cols(); ++s) {
        double acc = 0.0;  // row k = 0 (t = v-3) of the extended G is zero
        for (std::size_t k = 1; k < n; ++k) acc += spec.phi_weight(k) * gm(k - 1, s);
        rep.g2_min = std::min(rep.g2_min, acc);
    }
    rep.g2_nonneg = rep.g2_min >= -1e-12;

    for (std::size_t k = 0; k < n; ++k) rep.g2_sum += spec.phi_weight(k);
    rep.g2_sum_ok = rep.g2_sum <= 0.5 + 1e-12;

    rep.g3_phi_alpha = phi_eval(alpha_fn(spec), spec);
    rep.g3_ok = rep.g3_phi_alpha >= 0.0;

    std::vector<double> small;
    std::vector<double> large;
    for (double y : {1e-6, 1e-4, 1e-2, 1e1, 1e2, 1e3}) {
        GrowthSample smp{y, std::numeric_limits<double>::quiet_NaN(), false};
        try {
            smp.ratio = eval(spec.g, y) / y;
            (y < 1.0 ? small : large).push_back(smp.ratio);
        } catch (const EvalPole&) {
            smp.pole = true;
            rep.pole_adjacent = true;
        }
        rep.samples.push_back(smp);
    }
    const int ts = detail::trend(small);
    const int tl = detail::trend(large);
    if (ts == 1 && tl == 1) rep.f_class = GrowthClass::F2Like;
    else if (ts == -1 && tl == -1) rep.f_class = GrowthClass::F3Like;
    return rep;
}

// ---------------------------------------------------------------------------
// Linear problem: two independent solvers
// ---------------------------------------------------------------------------

/// Dense assembly of the linear problem Delta_C^v y(t) = -lambda h(t+v-1)
/// in the b+5 unknowns y(v-3..v+b+1), solved by LU with partial pivoting.
inline GridFn solve_linear_oracle(const ProblemSpec& spec, const GridFn& h) {
    if (h.size() != spec.forcing_size()) throw InvalidArgument("solve_linear_oracle: h needs b+2 samples");
    const std::size_t m = spec.extended_size();
    const std::size_t rows = spec.forcing_size();
    const double v = spec.v;
    const bool integer_order = v == 3.0;
    const double mu = 3.0 - v;

    DenseMatrix a(m, m);
    std::vector<double> rhs(m, 0.0);
    static constexpr double stencil[4] = {-1.0, 3.0, -3.0, 1.0};  // Delta^3 at j
    for (std::size_t t = 0; t < rows; ++t) {
        for (std::size_t j = 0; j <= t; ++j) {
            const double w = integer_order ? (j == t ? 1.0 : 0.0) : frac_sum_weight(mu, t, j);
            for (std::size_t q = 0; q < 4; ++q) a(t, j + q) += w * stencil[q];
        }
        rhs[t] = -spec.lambda * h[t];
    }
    // y(v-3) = 0
    a(rows, 0) = 1.0;
    // Delta^2 y(v-3) = 0
    a(rows + 1, 0) = 1.0;
    a(rows + 1, 1) = -2.0;
    a(rows + 1, 2) = 1.0;
    // Delta y(v+b) - phi(y) = 0
    a(rows + 2, m - 1) += 1.0;
    a(rows + 2, m - 2) -= 1.0;
    for (std::size_t k = 0; k < spec.state_size(); ++k) a(rows + 2, k) -= spec.phi_weight(k);

    return GridFn(spec.extended_grid(), solve_dense(std::move(a), rhs));
}

inline GridFn solve_linear_oracle(const ProblemSpec& spec) {
    return solve_linear_oracle(spec, sample_forcing(spec));
}

/// Green's function solution of the linear problem with forcing lambda h,
/// resolving phi(y) = phi(w) / (1 - phi(alpha)), extended to v+b+1.
inline GridFn greens_solve_linear(const GridFn& h, const ProblemSpec& spec, const GreensMatrix& gm) {
    if (gm.b != spec.b || gm.v != spec.v) throw InvalidArgument("greens_solve_linear: matrix does not match spec");
    if (h.size() != spec.forcing_size()) throw InvalidArgument("greens_solve_linear: h needs b+2 samples");
    const double phi_alpha = phi_eval(alpha_fn(spec), spec);
    if (std::fabs(1.0 - phi_alpha) <= 1e-10)
        throw ResonantFunctional("phi(alpha) = 1: the boundary functional is resonant");

    std::vector<double> f(spec.forcing_size());
    for (std::size_t s = 0; s < f.size(); ++s) f[s] = spec.lambda * h[s];
    const auto w = detail::greens_state(gm, f, 0.0);
    const double phi = detail::phi_of(spec, w) / (1.0 - phi_alpha);

    auto y = detail::greens_state(gm, f, phi);
    y.push_back(detail::extension_value(spec.v, spec.b, f, phi));
    return GridFn(spec.extended_grid(), std::move(y));
}

/// Max defect of the nonlinear problem at y (b+5 points through v+b+1).
inline double verify_solution(const GridFn& y_ext, const ProblemSpec& spec) {
    detail::require_extended(spec, y_ext);
    const GridFn hs = sample_forcing(spec);
    const auto f = detail::nonlinear_forcing(spec, hs.values(), y_ext.values());
    return detail::residual(spec, y_ext, f);
}

/// Max defect of the linear problem (g == 1) with the given forcing h.
inline double verify_linear(const GridFn& y_ext, const ProblemSpec& spec, const GridFn& h) {
    detail::require_extended(spec, y_ext);
    if (h.size() != spec.forcing_size()) throw InvalidArgument("verify_linear: h needs b+2 samples");
    std::vector<double> f(spec.forcing_size());
    for (std::size_t s = 0; s < f.size(); ++s) f[s] = spec.lambda * h[s];
    return detail::residual(spec, y_ext, f);
}

// ---------------------------------------------------------------------------
// Nonlinear problem: damped fixed-point iteration
// ---------------------------------------------------------------------------

struct PicardOptions {
    double tol = 1e-10;
    int max_iter = 10000;
    double damping = 0.5;
};

struct SolveReport {
    std::vector<double> solution;  // y(v-3..v+b+1), b+5 values; may be non-finite on divergence
    int iterations = 0;
    double final_step = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
    bool diverged = false;
    bool in_cone = false;
    double phi_value = 0.0;

    GridFn solution_fn(const ProblemSpec& spec) const { return GridFn(spec.extended_grid(), solution); }
};

/// Seeks a fixed point of F by iterating y <- (1-d) y + d T(y) with
///   T(y) = w(y) + alpha * phi(w(y)) / (1 - phi(alpha)),  w(y) = lambda G (h g(y)).
/// T and F have the same fixed points; T folds the linear phi-coupling into
/// the iteration so that phi(alpha) > 1 does not by itself cause divergence.
inline SolveReport picard_solve(const ProblemSpec& spec, const GridFn& y0, const PicardOptions& opt = {}) {
    if (!(opt.tol > 0.0)) throw InvalidArgument("picard_solve: tol must be positive");
    if (opt.max_iter < 1) throw InvalidArgument("picard_solve: max_iter must be >= 1");
    if (!(opt.damping > 0.0 && opt.damping <= 1.0)) throw InvalidArgument("picard_solve: damping must be in (0, 1]");
    detail::require_state(spec, y0, "picard_solve");

    const GreensMatrix gm = greens_matrix(spec.v, spec.b);
    const ConeConstants cc = cone_constants(gm);
    const GridFn hs = sample_forcing(spec);
    const double phi_alpha = phi_eval(alpha_fn(spec), spec);
    if (std::fabs(1.0 - phi_alpha) <= 1e-10)
        throw ResonantFunctional("phi(alpha) = 1: the boundary functional is resonant");

    const std::size_t n = spec.state_size();
    std::vector<double> y(y0.values().begin(), y0.values().begin() + static_cast<std::ptrdiff_t>(n));
    y[0] = 0.0;

    SolveReport rep;
    for (int it = 1; it <= opt.max_iter; ++it) {
        const auto f = detail::nonlinear_forcing(spec, hs.values(), y);
        auto ty = detail::greens_state(gm, f, 0.0);
        const double phi = detail::phi_of(spec, ty) / (1.0 - phi_alpha);
        for (std::size_t j = 0; j < n; ++j) ty[j] += static_cast<double>(j) * phi;

        double step = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double next = (1.0 - opt.damping) * y[j] + opt.damping * ty[j];
            step = std::max(step, std::fabs(next - y[j]));
            y[j] = next;
        }
        rep.iterations = it;
        rep.final_step = step;
        const double norm = detail::sup_abs(y);
        if (!std::isfinite(step) || !std::isfinite(norm) || norm > 1e12) {
            rep.diverged = true;
            break;
        }
        if (step <= opt.tol) break;
    }

    rep.solution = y;
    if (rep.diverged) {
        rep.solution.push_back(std::numeric_limits<double>::quiet_NaN());
        return rep;
    }
    const auto f = detail::nonlinear_forcing(spec, hs.values(), y);
    rep.phi_value = detail::phi_of(spec, y);
    rep.solution.push_back(detail::extension_value(spec.v, spec.b, f, rep.phi_value));

    const GridFn y_ext(spec.extended_grid(), rep.solution);
    rep.residual = verify_solution(y_ext, spec);
    rep.in_cone = cone_contains(GridFn(spec.state_grid(), y), cc, spec);
    rep.converged = rep.final_step <= opt.tol && rep.residual <= 100.0 * opt.tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Cone sampling, mapping check, radius scan
// ---------------------------------------------------------------------------

/// A random cone element of unit norm: y(v-3) = 0, other values drawn
/// uniformly from (gamma_bar, 1) and rescaled to max 1, rejected until phi >= 0.
inline GridFn sample_cone_element(const ProblemSpec& spec, const ConeConstants& cc, std::mt19937_64& rng,
                                  int max_attempts = 10000) {
    std::uniform_real_distribution<double> unif(cc.gamma_bar, 1.0);
    const std::size_t n = spec.state_size();
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<double> y(n, 0.0);
        double mx = 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            y[j] = unif(rng);
            mx = std::max(mx, y[j]);
        }
        for (double& x : y) x /= mx;
        GridFn cand(spec.state_grid(), std::move(y));
        if (cone_contains(cand, cc, spec)) return cand;
    }
    throw SamplingFailure("no cone element found in " + std::to_string(max_attempts) + " attempts");
}

struct ConeMappingResult {
    int samples = 0;
    int failures = 0;
    int poles = 0;  // samples where h or g could not be evaluated
};

/// Draws cone elements y and checks that F(y) is again in the cone.
inline ConeMappingResult check_cone_mapping(const ProblemSpec& spec, const GreensMatrix& gm,
                                            const ConeConstants& cc, int n_samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ConeMappingResult res;
    for (int i = 0; i < n_samples; ++i) {
        const GridFn y = sample_cone_element(spec, cc, rng);
        ++res.samples;
        try {
            if (!cone_contains(apply_operator_F(y, spec, gm), cc, spec)) ++res.failures;
        } catch (const ExpressionError&) {
            ++res.poles;
            ++res.failures;
        }
    }
    return res;
}

struct RadiusScanRow {
    double radius;
    double min_ratio;
    double mean_ratio;
    double max_ratio;
    int evaluated;
    int poles;
};

/// For each radius r, ||F(r u)|| / r over n_dirs random unit cone elements u.
/// The same directions are reused at every radius.
inline std::vector<RadiusScanRow> radius_scan(const ProblemSpec& spec, std::span<const double> radii,
                                              int n_dirs, std::uint64_t seed) {
    if (n_dirs < 1) throw InvalidArgument("radius_scan: n_dirs must be >= 1");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) throw InvalidArgument("radius_scan: radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1])) throw InvalidArgument("radius_scan: radii must increase");
    }
    const GreensMatrix gm = greens_matrix(spec.v, spec.b);
    const ConeConstants cc = cone_constants(gm);
    std::mt19937_64 rng(seed);
    std::vector<GridFn> dirs;
    dirs.reserve(static_cast<std::size_t>(n_dirs));
    for (int i = 0; i < n_dirs; ++i) dirs.push_back(sample_cone_element(spec, cc, rng));

    std::vector<RadiusScanRow> table;
    for (double r : radii) {
        RadiusScanRow row{r, std::numeric_limits<double>::infinity(), 0.0,
                          -std::numeric_limits<double>::infinity(), 0, 0};
        for (const GridFn& u : dirs) {
            try {
                const GridFn fy = apply_operator_F(r * u, spec, gm);
                const double ratio = detail::state_norm(fy.values(), spec.state_size()) / r;
                row.min_ratio = std::min(row.min_ratio, ratio);
                row.max_ratio = std::max(row.max_ratio, ratio);
                row.mean_ratio += ratio;
                ++row.evaluated;
            } catch (const ExpressionError&) {
                ++row.poles;
            } catch (const InvalidArgument&) {
                ++row.poles;  // F(r u) overflowed
            }
        }
        if (row.evaluated > 0) row.mean_ratio /= row.evaluated;
        else row.mean_ratio = row.min_ratio = row.max_ratio = std::numeric_limits<double>::quiet_NaN();
        table.push_back(row);
    }
    return table;
}

/// Sup-norm relative distance ||a - b|| / max(||b||, tiny).
inline double relative_sup_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidArgument("relative_sup_error: size mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num = std::max(num, std::fabs(a[i] - b[i]));
        den = std::max(den, std::fabs(b[i]));
    }
    if (den == 0.0) return num;
    return num / den;
}

}  // namespace fracbvp
