#pragma once

#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "lsc/checker.hpp"
#include "lsc/config.hpp"
#include "lsc/correspondence.hpp"
#include "lsc/distance.hpp"
#include "lsc/errors.hpp"
#include "lsc/format.hpp"
#include "lsc/version.hpp"
#include "lsc/witness.hpp"

namespace lsc {

using ordered_json = nlohmann::ordered_json;

// All reports share one envelope: {meta, config, results}. meta carries the
// tool identity and the seed so a report can be reproduced byte for byte.

inline ordered_json meta_json(std::uint64_t seed) {
    ordered_json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["seed"] = seed;
    return m;
}

inline ordered_json to_json(const Config& cfg) {
    ordered_json j;
    j["K"] = cfg.K;
    j["tol"] = cfg.tol;
    j["bisect_tol"] = cfg.bisect_tol;
    j["seed"] = cfg.seed;
    j["box"] = cfg.box;
    j["window"] = cfg.window;
    j["n"] = cfg.n;
    j["x_grid"] = cfg.x_grid;
    j["r_grid"] = cfg.r_grid;
    j["output"] = cfg.output;
    j["format"] = cfg.format;
    return j;
}

inline ordered_json to_json(const TruncSeq& t) { return ordered_json(t.coords()); }

inline ordered_json to_json(const Check& c) {
    ordered_json j;
    j["name"] = c.name;
    j["lhs"] = c.lhs;
    j["rel"] = c.rel;
    j["rhs"] = c.rhs;
    j["passed"] = c.passed;
    return j;
}

inline ordered_json to_json(const Certificate& cert) {
    ordered_json j;
    j["kind"] = cert_kind_name(cert.kind);
    j["family"] = family_name(cert.family);
    j["K"] = cert.K;
    j["x"] = cert.x;
    j["radius"] = cert.radius;
    j["status"] = cert.status;
    j["source"] = cert.source ? to_json(*cert.source) : ordered_json(nullptr);
    j["witness_point"] =
        cert.witness_point ? to_json(*cert.witness_point) : ordered_json(nullptr);
    j["witness_index"] = cert.witness_index;
    j["bound"] = cert.bound;
    j["required_K"] = cert.required_K;
    j["checks"] = ordered_json::array();
    for (const auto& c : cert.checks) j["checks"].push_back(to_json(c));
    j["all_checks_pass"] = cert.all_checks_pass();
    return j;
}

inline ordered_json to_json(const DistanceResult& res) {
    ordered_json j;
    j["dist"] = res.dist;
    j["witness"] = to_json(res.witness);
    j["t1_interval"] =
        res.t1_interval.is_empty()
            ? ordered_json::array()
            : ordered_json::array({res.t1_interval.lo, res.t1_interval.hi});
    j["iterations"] = res.iterations;
    return j;
}

inline ordered_json to_json(const ModulusTable& tab) {
    ordered_json j;
    j["family"] = family_name(tab.family);
    j["K"] = tab.K;
    j["rays_included"] = tab.rays_included;
    j["n"] = tab.spec.n;
    j["strategy"] = mix_name(tab.spec.strategy);
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < tab.x_grid.size(); ++i) {
        ordered_json row;
        row["x"] = tab.x_grid[i];
        row["excess_lb"] = tab.excess_lb[i];
        row["attained_at"] = tab.attained_at[i];
        j["rows"].push_back(std::move(row));
    }
    return j;
}

inline ordered_json to_json(const VlscReport& rep) {
    ordered_json j;
    j["x_points"] = rep.x_points;
    j["all_pass"] = rep.all_pass;
    j["rows"] = ordered_json::array();
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["label"] = row.label;
        r["point"] = to_json(row.target);
        r["r"] = row.r;
        r["delta"] = row.delta;
        if (row.M) r["M"] = *row.M;
        else r["M"] = nullptr;
        r["max_dist"] = row.max_dist;
        r["pass"] = row.pass;
        j["rows"].push_back(std::move(r));
    }
    return j;
}

inline ordered_json to_json(const SuiteReport& rep) {
    ordered_json j;
    j["all_pass"] = rep.all_pass;
    j["warnings"] = rep.warnings;
    j["sections"] = ordered_json::array();
    for (const auto& sec : rep.sections) {
        ordered_json s;
        s["name"] = sec.name;
        s["passed"] = sec.passed;
        s["checks"] = sec.checks;
        s["failures"] = sec.failures;
        s["notes"] = sec.notes;
        s["certificates"] = ordered_json::array();
        for (const auto& cert : sec.certificates)
            s["certificates"].push_back(to_json(cert));
        j["sections"].push_back(std::move(s));
    }
    return j;
}

/// Wrap results in the standard envelope.
inline ordered_json report_envelope(const Config& cfg, ordered_json results) {
    ordered_json j;
    j["meta"] = meta_json(cfg.seed);
    j["config"] = to_json(cfg);
    j["results"] = std::move(results);
    return j;
}

/// Serialize with 17 significant digits so doubles round-trip exactly.
/// nlohmann prints shortest-round-trip decimals already; this is the single
/// place report text is produced, so formatting stays uniform.
inline std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

inline void write_modulus_csv(std::ostream& os, const ModulusTable& tab) {
    os << "family,x,excess_lb,attained_at\n";
    for (std::size_t i = 0; i < tab.x_grid.size(); ++i)
        os << family_name(tab.family) << "," << fmt_g17(tab.x_grid[i]) << ","
           << fmt_g17(tab.excess_lb[i]) << "," << tab.attained_at[i] << "\n";
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

} // namespace lsc
