#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fracbvp/commands.hpp"

int main(int argc, char** argv) {
    using namespace fracbvp::cli;

    CLI::App app{"Caputo fractional difference BVPs: Green's functions, cone constants, solvers"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    Overrides ov;
    app.add_option("--config", config_path, "Problem configuration (JSON)");
    app.add_option("--out", out_path, "Output file or directory ('-' for stdout)");
    app.add_option_function<double>("--lambda", [&](double x) { ov.lambda = x; }, "Override lambda");
    app.add_option_function<std::uint64_t>("--seed", [&](std::uint64_t x) { ov.seed = x; }, "Override the RNG seed");
    app.add_option_function<double>("--tol", [&](double x) { ov.tol = x; }, "Override the solver tolerance");
    app.add_option_function<int>("--max-iter", [&](int x) { ov.max_iter = x; }, "Override the iteration cap");
    app.add_option_function<double>("--damping", [&](double x) { ov.damping = x; }, "Override the damping in (0, 1]");

    std::string v_text;
    long long b = 0;
    auto* greens = app.add_subcommand("greens", "Write the Green's function matrix as CSV (t,s,G)");
    greens->add_option("v", v_text, "Order 2 < v <= 3, e.g. 8/3")->required();
    greens->add_option("b", b, "Nonnegative integer b")->required();

    auto* constants = app.add_subcommand("constants", "Print gamma, A_alpha, gamma_bar, eta, rho and windows");
    auto* solve = app.add_subcommand("solve", "Run the damped fixed-point solver and write t,y CSV");
    auto* verify = app.add_subcommand("verify", "Check hypotheses, the cone mapping and the linear oracle");

    int example_id = 0;
    auto* example = app.add_subcommand("example", "Materialize and check a built-in example (1 or 2)");
    example->add_option("id", example_id, "Example id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadArguments;
    }

    if (greens->parsed()) return cmd_greens(v_text, b, out_path, std::cout, std::cerr);
    if (constants->parsed()) return cmd_constants(config_path, ov, out_path, std::cout, std::cerr);
    if (solve->parsed()) return cmd_solve(config_path, ov, out_path, std::cout, std::cerr);
    if (verify->parsed()) return cmd_verify(config_path, ov, out_path, std::cout, std::cerr);
    if (example->parsed())
        return cmd_example(example_id, ov, out_path.empty() ? "example" + std::to_string(example_id) : out_path,
                           std::cout, std::cerr);
    return kBadArguments;
}
