#pragma once

// Implementations of the command-line subcommands. Each returns a process
// exit code and writes human-readable output to `out`, diagnostics to `err`.
//
// Exit codes: 0 ok, 1 checks failed, 2 bad arguments or config, 3 I/O,
// 4 degenerate math, 5 solver not converged.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "fracbvp/bvp.hpp"
#include "fracbvp/config.hpp"
#include "fracbvp/greens.hpp"
#include "fracbvp/rational.hpp"

namespace fracbvp::cli {

enum ExitCode : int {
    kOk = 0,
    kChecksFailed = 1,
    kBadArguments = 2,
    kIoError = 3,
    kDegenerate = 4,
    kNotConverged = 5,
};

/// Flags that override values from a config file.
struct Overrides {
    std::optional<double> lambda;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<int> max_iter;
    std::optional<double> damping;

    void apply(Config& c) const {
        if (lambda) c.lambda = {*lambda, std::nullopt};
        if (seed) c.solver.seed = *seed;
        if (tol) c.solver.tol = *tol;
        if (max_iter) c.solver.max_iter = *max_iter;
        if (damping) c.solver.damping = *damping;
    }
};

inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Grid point v-3+j, exact when v is.
inline std::string grid_point(const ExactNumber& v, long long j) {
    if (v.exact) return (*v.exact + Rational(j - 3)).str();
    return fmt17(v.value - 3.0 + static_cast<double>(j));
}

namespace detail {

// Runs `body` with a stream bound to `path` ("-" or empty means `fallback`).
template <typename Body>
int with_output(const std::string& path, std::ostream& fallback, std::ostream& err, Body&& body) {
    if (path.empty() || path == "-") return body(fallback);
    std::ostringstream buf;
    const int code = body(buf);
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << buf.str()) || !f.flush()) {
        err << "error: cannot write '" << path << "'\n";
        return kIoError;
    }
    return code;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const EmptyWindow& e) {
        err << "error: " << e.what() << " (enlarge b so the window [(v+b)/4, 3(v+b)/4] holds a grid point)\n";
        return kDegenerate;
    } catch (const DegenerateColumn& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const SingularSystem& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const ResonantFunctional& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const EvalPole& e) {
        err << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadArguments;
    }
}

inline Config load_with(const std::string& path, const Overrides& ov) {
    if (path.empty()) throw ConfigError("--config PATH is required");
    Config c = load_config(path);
    ov.apply(c);
    (void)c.to_spec();
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline void write_greens_csv(std::ostream& os, const ExactNumber& v, long long b) {
    const GreensMatrix gm = greens_matrix(v.value, b);
    os << "t,s,G\n";
    for (std::size_t k = 0; k < gm.rows(); ++k)
        for (std::size_t s = 0; s < gm.cols(); ++s)
            os << grid_point(v, static_cast<long long>(k) + 1) << ',' << s << ',' << fmt17(gm(k, s)) << '\n';
}

inline int cmd_greens(const std::string& v_text, long long b, const std::string& out_path, std::ostream& out,
                      std::ostream& err) {
    return detail::guarded(err, [&] {
        const ExactNumber v = parse_number(v_text);
        require_bvp_order(v.value, b);
        return detail::with_output(out_path, out, err, [&](std::ostream& os) {
            write_greens_csv(os, v, b);
            return int{kOk};
        });
    });
}

// ---------------------------------------------------------------------------

inline void write_constants(std::ostream& os, const Config& cfg) {
    const ProblemSpec spec = cfg.to_spec();
    const GreensMatrix gm = greens_matrix(spec.v, spec.b);
    const ConeConstants cc = cone_constants(gm);
    const GridFn hs = sample_forcing(spec);
    const double phi_alpha = phi_eval(alpha_fn(spec), spec);
    const Rational a_alpha_exact(static_cast<std::int64_t>(cc.window.lo) + 1, spec.b + 3);

    double g2_sum = 0.0;
    for (std::size_t k = 0; k < spec.state_size(); ++k) g2_sum += spec.phi_weight(k);

    os << "gamma = " << fmt17(cc.gamma) << '\n';
    os << "a_alpha = " << fmt17(cc.a_alpha) << " (" << a_alpha_exact.str() << ")\n";
    os << "gamma_bar = " << fmt17(cc.gamma_bar) << '\n';
    os << "eta = " << fmt17(compute_eta(gm, hs)) << '\n';
    os << "rho = " << fmt17(compute_rho(gm, hs)) << '\n';
    os << "window_lo = " << cc.window.lo << '\n';
    os << "window_hi = " << cc.window.hi << '\n';
    os << "window_t = [" << grid_point(cfg.v, static_cast<long long>(cc.window.lo) + 1) << ", "
       << grid_point(cfg.v, static_cast<long long>(cc.window.hi) + 1) << "]\n";
    const IndexWindow rw = rho_window(spec.v, spec.b);
    os << "rho_window_s = [" << rw.lo << ", " << rw.hi << "]\n";
    os << "phi_alpha = " << fmt17(phi_alpha) << '\n';
    os << "g2_sum = " << fmt17(g2_sum) << '\n';
    if (g2_sum > 0.5 + 1e-12) os << "warning: G2 sum exceeds 1/2\n";
}

inline int cmd_constants(const std::string& config_path, const Overrides& ov, const std::string& out_path,
                         std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const Config cfg = detail::load_with(config_path, ov);
        std::ostringstream report;
        write_constants(report, cfg);
        return detail::with_output(out_path, out, err, [&](std::ostream& os) {
            os << report.str();
            return int{kOk};
        });
    });
}

// ---------------------------------------------------------------------------

inline void write_solution_csv(std::ostream& os, const Config& cfg, const SolveReport& rep) {
    if (!rep.converged) os << "# NOT CONVERGED\n";
    os << "t,y\n";
    for (std::size_t j = 0; j < rep.solution.size(); ++j)
        os << grid_point(cfg.v, static_cast<long long>(j)) << ',' << fmt17(rep.solution[j]) << '\n';
}

inline void write_solve_summary(std::ostream& os, const SolveReport& rep) {
    os << "iterations = " << rep.iterations << '\n';
    os << "final_step = " << fmt17(rep.final_step) << '\n';
    os << "residual = " << fmt17(rep.residual) << '\n';
    os << "phi = " << fmt17(rep.phi_value) << '\n';
    os << "converged = " << (rep.converged ? "true" : "false") << '\n';
    os << "diverged = " << (rep.diverged ? "true" : "false") << '\n';
    os << "in_cone = " << (rep.in_cone ? "true" : "false") << '\n';
}

/// Picard solve from y0 = 1 on v-2..v+b.
inline SolveReport solve_config(const Config& cfg) {
    const ProblemSpec spec = cfg.to_spec();
    std::vector<double> y0(spec.state_size(), 1.0);
    y0[0] = 0.0;
    return picard_solve(spec, GridFn(spec.state_grid(), std::move(y0)), cfg.picard());
}

inline int cmd_solve(const std::string& config_path, const Overrides& ov, const std::string& out_path,
                     std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const Config cfg = detail::load_with(config_path, ov);
        const SolveReport rep = solve_config(cfg);
        const bool csv_on_stdout = out_path.empty() || out_path == "-";
        const int code = detail::with_output(out_path, out, err, [&](std::ostream& os) {
            write_solution_csv(os, cfg, rep);
            return int{kOk};
        });
        if (code != kOk) return code;
        write_solve_summary(csv_on_stdout ? err : out, rep);
        return rep.converged ? int{kOk} : int{kNotConverged};
    });
}

// ---------------------------------------------------------------------------

/// Writes the condition report and the mapping/oracle checks; returns true
/// iff every check passes.
inline bool write_verify(std::ostream& os, const Config& cfg) {
    const ProblemSpec spec = cfg.to_spec();
    const GreensMatrix gm = greens_matrix(spec.v, spec.b);
    const ConeConstants cc = cone_constants(gm);
    const ConditionReport rep = check_conditions(spec, gm);

    bool all = true;
    auto line = [&](bool ok, const std::string& name, const std::string& detail) {
        all = all && ok;
        os << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    };

    line(rep.g1_linear, "G1", "phi is linear with coefficients c_k/(b+3)");
    line(rep.g2_nonneg, "G2 kernel", "min_s sum_k c_k/(b+3) G(v-3+k,s) = " + fmt17(rep.g2_min));
    line(rep.g2_sum_ok, "G2 sum", "sum_k c_k/(b+3) = " + fmt17(rep.g2_sum) + " (<= 1/2)");
    line(rep.g3_ok, "G3", "phi(alpha) = " + fmt17(rep.g3_phi_alpha));
    line(rep.f_class != GrowthClass::Inconclusive, "F2/F3",
         std::string("g(y)/y classified ") + to_string(rep.f_class) + (rep.pole_adjacent ? " (pole-adjacent samples skipped)" : ""));
    for (const auto& smp : rep.samples)
        os << "  g(y)/y at y = " << fmt17(smp.y) << ": " << (smp.pole ? std::string("pole") : fmt17(smp.ratio)) << '\n';

    constexpr int kSamples = 100;
    const ConeMappingResult map = check_cone_mapping(spec, gm, cc, kSamples, cfg.solver.seed);
    line(map.failures == 0, "cone mapping",
         std::to_string(map.samples - map.failures) + "/" + std::to_string(map.samples) +
             " sampled cone elements mapped into the cone (seed " + std::to_string(cfg.solver.seed) + ")");

    const GridFn hs = sample_forcing(spec);
    const GridFn y_green = greens_solve_linear(hs, spec, gm);
    const GridFn y_oracle = solve_linear_oracle(spec, hs);
    const double rel = relative_sup_error(y_green.values(), y_oracle.values());
    line(rel <= 1e-9, "oracle equivalence", "relative sup error " + fmt17(rel) + " (<= 1e-9)");
    return all;
}

inline int cmd_verify(const std::string& config_path, const Overrides& ov, const std::string& out_path,
                      std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const Config cfg = detail::load_with(config_path, ov);
        std::ostringstream report;
        const bool ok = write_verify(report, cfg);
        const int code = detail::with_output(out_path, out, err, [&](std::ostream& os) {
            os << report.str();
            return int{kOk};
        });
        if (code != kOk) return code;
        return ok ? int{kOk} : int{kChecksFailed};
    });
}

// ---------------------------------------------------------------------------

/// Materializes preset `id` into out_dir (config.json, verify.txt,
/// constants.txt) and echoes the reports to `out`.
inline int cmd_example(int id, const Overrides& ov, const std::string& out_dir, std::ostream& out,
                       std::ostream& err) {
    return detail::guarded(err, [&] {
        if (id != 1 && id != 2) {
            err << "error: unknown example id " << id << " (expected 1 or 2)\n";
            return int{kBadArguments};
        }
        Config cfg = example_config(id);
        ov.apply(cfg);
        (void)cfg.to_spec();

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            err << "error: cannot create '" << out_dir << "': " << ec.message() << "\n";
            return int{kIoError};
        }
        const std::filesystem::path dir(out_dir);
        const std::string config_path = (dir / "config.json").string();
        {
            std::ofstream f(config_path, std::ios::binary);
            if (!f || !(f << config_to_json(cfg).dump(2) << '\n')) {
                err << "error: cannot write '" << config_path << "'\n";
                return int{kIoError};
            }
        }
        out << "# example " << id << " config: " << config_path << '\n';
        const Overrides none;
        std::ostringstream verify_text;
        const int verify_code = cmd_verify(config_path, none, (dir / "verify.txt").string(), verify_text, err);
        const int constants_code = cmd_constants(config_path, none, (dir / "constants.txt").string(), out, err);
        if (constants_code != kOk) return constants_code;

        std::ifstream v((dir / "verify.txt").string()), c((dir / "constants.txt").string());
        out << "# verify\n" << v.rdbuf() << "# constants\n" << c.rdbuf();
        return verify_code;
    });
}

}  // namespace fracbvp::cli
