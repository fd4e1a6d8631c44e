#pragma once

// JSON problem configuration and the two built-in presets.
//
//   {
//     "v": "8/3", "b": 9, "lambda": 1,
//     "h": "t^2", "g": "y*(exp(y)-1)",
//     "phi": [{"k": 2, "c": 3}, {"k": 5, "c": "5/2"}],
//     "solver": {"tol": 1e-10, "max_iter": 10000, "damping": 0.5, "seed": 42}
//   }
//
// phi entry k is the coefficient c_k of y(v-3+k); its weight in phi is c_k/(b+3).
// v, lambda and c accept a JSON number or a string holding an integer, a
// fraction "a/b" or a decimal.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracbvp/bvp.hpp"
#include "fracbvp/errors.hpp"
#include "fracbvp/expr.hpp"
#include "fracbvp/rational.hpp"

namespace fracbvp {

class ConfigError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

struct PhiTerm {
    long long k = 0;
    ExactNumber c;
};

struct SolverConfig {
    double tol = 1e-10;
    int max_iter = 10000;
    double damping = 0.5;
    std::uint64_t seed = 42;
};

struct Config {
    ExactNumber v;
    long long b = 0;
    ExactNumber lambda{1.0, Rational(1)};
    std::string h;
    std::string g;
    std::vector<PhiTerm> phi;
    SolverConfig solver;

    ProblemSpec to_spec() const {
        std::vector<double> coeffs;
        if (b >= 0) coeffs.assign(static_cast<std::size_t>(b + 4), 0.0);
        for (const auto& term : phi) {
            if (term.k < 0 || term.k > b + 3)
                throw ConfigError("phi index k = " + std::to_string(term.k) + " outside [0, b+3]");
            auto& slot = coeffs[static_cast<std::size_t>(term.k)];
            if (slot != 0.0) throw ConfigError("phi index k = " + std::to_string(term.k) + " given twice");
            slot = term.c.value;
        }
        return ProblemSpec(v.value, b, lambda.value, parse_expr(h, "t"), parse_expr(g, "y"), std::move(coeffs));
    }

    PicardOptions picard() const { return {solver.tol, solver.max_iter, solver.damping}; }
};

namespace detail {

inline ExactNumber json_number(const nlohmann::json& j, const std::string& key) {
    if (j.is_number_integer()) return {static_cast<double>(j.get<long long>()), Rational(j.get<long long>())};
    if (j.is_number()) return {j.get<double>(), std::nullopt};
    if (j.is_string()) {
        try {
            return parse_number(j.get<std::string>());
        } catch (const InvalidArgument& e) {
            throw ConfigError("'" + key + "': " + e.what());
        }
    }
    throw ConfigError("'" + key + "' must be a number or a numeric string");
}

inline nlohmann::json number_json(const ExactNumber& x) {
    if (x.exact) {
        if (x.exact->den == 1) return x.exact->num;
        return x.exact->str();
    }
    return x.value;
}

}  // namespace detail

inline Config config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const char* key : {"v", "b", "h", "g"})
        if (!j.contains(key)) throw ConfigError(std::string("config is missing '") + key + "'");
    Config c;
    try {
        c.v = detail::json_number(j.at("v"), "v");
        if (!j.at("b").is_number_integer()) throw ConfigError("'b' must be an integer");
        c.b = j.at("b").get<long long>();
        if (j.contains("lambda")) c.lambda = detail::json_number(j.at("lambda"), "lambda");
        c.h = j.at("h").get<std::string>();
        c.g = j.at("g").get<std::string>();
        if (j.contains("phi")) {
            if (!j.at("phi").is_array()) throw ConfigError("'phi' must be an array");
            for (const auto& term : j.at("phi")) {
                if (!term.is_object() || !term.contains("k") || !term.contains("c"))
                    throw ConfigError("each phi entry needs 'k' and 'c'");
                if (!term.at("k").is_number_integer()) throw ConfigError("phi 'k' must be an integer");
                c.phi.push_back({term.at("k").get<long long>(), detail::json_number(term.at("c"), "phi.c")});
            }
        }
        if (j.contains("solver")) {
            const auto& s = j.at("solver");
            if (!s.is_object()) throw ConfigError("'solver' must be an object");
            if (s.contains("tol")) c.solver.tol = s.at("tol").get<double>();
            if (s.contains("max_iter")) c.solver.max_iter = s.at("max_iter").get<int>();
            if (s.contains("damping")) c.solver.damping = s.at("damping").get<double>();
            if (s.contains("seed")) c.solver.seed = s.at("seed").get<std::uint64_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

inline nlohmann::json config_to_json(const Config& c) {
    nlohmann::json j;
    j["v"] = detail::number_json(c.v);
    j["b"] = c.b;
    j["lambda"] = detail::number_json(c.lambda);
    j["h"] = c.h;
    j["g"] = c.g;
    j["phi"] = nlohmann::json::array();
    for (const auto& term : c.phi) j["phi"].push_back({{"k", term.k}, {"c", detail::number_json(term.c)}});
    j["solver"] = {{"tol", c.solver.tol},
                   {"max_iter", c.solver.max_iter},
                   {"damping", c.solver.damping},
                   {"seed", c.solver.seed}};
    return j;
}

inline Config parse_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    Config c = config_from_json(j);
    (void)c.to_spec();  // validates v, b, lambda, expressions and phi
    return c;
}

/// Thrown when a file cannot be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

inline Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

/// The two worked examples: v = 8/3, b = 9, lambda = 1.
///   1: h = t^2,    g = y(e^y - 1), Delta y(35/3) = 3/12 y(5/3) + 5/24 y(14/3)
///   2: h = e^t,    g = sec^2 y,    Delta y(35/3) = 7/12 y(2/3) - 1/6 y(17/3)
inline Config example_config(int id) {
    Config c;
    c.v = parse_number("8/3");
    c.b = 9;
    if (id == 1) {
        c.h = "t^2";
        c.g = "y*(exp(y)-1)";
        c.phi = {{2, parse_number("3")}, {5, parse_number("5/2")}};
    } else if (id == 2) {
        c.h = "exp(t)";
        c.g = "sec(y)^2";
        c.phi = {{1, parse_number("7")}, {6, parse_number("-2")}};
    } else {
        throw ConfigError("unknown example id " + std::to_string(id) + " (expected 1 or 2)");
    }
    return c;
}

}  // namespace fracbvp
