#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/errors.hpp"

namespace lsc {

/// Shared knobs for the checker and CLI. Defaults are the documented
/// reference configuration; reports echo the configuration they ran under.
struct Config {
    int K = 50;
    double tol = 1e-12;        // membership tolerance for sampled/derived points
    double bisect_tol = 1e-12; // absolute + relative bisection termination
    std::uint64_t seed = 42;
    double box = 10.0;   // |t1| clip for sampling
    double window = 5.0; // depth of interior samples below the caps
    int n = 500;         // samples per (family, x) cell
    std::vector<double> x_grid = {0.001, 0.005, 0.01, 0.05, 0.1, 0.2, 0.4};
    std::vector<double> r_grid = {0.1, 0.5, 1.0};
    std::string output;   // report path; empty means stdout
    std::string format;   // json, csv, or text; empty means the subcommand default

    void validate() const {
        if (K < 2) throw std::domain_error("config: K must be >= 2");
        if (!(tol > 0.0)) throw std::domain_error("config: tol must be > 0");
        if (!(bisect_tol > 0.0)) throw std::domain_error("config: bisect_tol must be > 0");
        if (!(box > 0.0)) throw std::domain_error("config: box must be > 0");
        if (!(window > 0.0)) throw std::domain_error("config: window must be > 0");
        if (n < 1) throw std::domain_error("config: n must be >= 1");
        for (double x : x_grid)
            if (!(x >= 0.0 && x <= 1.0))
                throw std::domain_error("config: x_grid value " + std::to_string(x) +
                                        " outside [0, 1]");
        for (double r : r_grid)
            if (!(r > 0.0))
                throw std::domain_error("config: r_grid value " + std::to_string(r) +
                                        " must be > 0");
        if (!format.empty() && format != "json" && format != "csv" && format != "text")
            throw std::domain_error("config: format must be json, csv, or text");
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<double> parse_grid(const std::string& text, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            const double v = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::domain_error("config: bad number '" + item + "' in " + key);
        }
    }
    return out;
}

} // namespace detail

/// Apply one key=value assignment. Keys mirror the CLI flag names.
inline void apply_config_entry(Config& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "K") cfg.K = std::stoi(value);
        else if (key == "tol") cfg.tol = std::stod(value);
        else if (key == "bisect_tol") cfg.bisect_tol = std::stod(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "box") cfg.box = std::stod(value);
        else if (key == "window") cfg.window = std::stod(value);
        else if (key == "n") cfg.n = std::stoi(value);
        else if (key == "x_grid") cfg.x_grid = detail::parse_grid(value, key);
        else if (key == "r_grid") cfg.r_grid = detail::parse_grid(value, key);
        else if (key == "output") cfg.output = value;
        else if (key == "format") cfg.format = value;
        else throw std::domain_error("config: unknown key '" + key + "'");
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("config: bad value '" + value + "' for key '" + key + "'");
    }
}

/// Load a flat key=value file ('#' starts a comment) onto a base config.
inline Config load_config_file(const std::string& path, Config base = {}) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error("config: line " + std::to_string(lineno) +
                                    " is not key=value: '" + line + "'");
        apply_config_entry(base, detail::trim(line.substr(0, eq)),
                           detail::trim(line.substr(eq + 1)));
    }
    return base;
}

} // namespace lsc
