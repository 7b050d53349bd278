#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsc/checker.hpp"
#include "lsc/config.hpp"
#include "lsc/report.hpp"
#include "lsc/version.hpp"

namespace lsc {

// Exit codes are a contract scripts branch on:
//   0 pass, 1 checks ran but failed, 2 usage, 3 empty set,
//   4 truncation-insufficient, 5 I/O.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEmptySet = 3;
inline constexpr int kExitTruncation = 4;
inline constexpr int kExitIo = 5;

namespace detail {

// Common flags bind here; resolve_config() merges them over an optional
// config file, flags winning. Option pointers tell us which were given.
struct CommonBind {
    int K = 50;
    double tol = 1e-12;
    double bisect_tol = 1e-12;
    std::uint64_t seed = 42;
    double box = 10.0;
    double window = 5.0;
    int n = 500;
    std::string x_grid;
    std::string r_grid;
    std::string config_path;
    std::string out_path;
    std::string format;

    CLI::Option* oK = nullptr;
    CLI::Option* oTol = nullptr;
    CLI::Option* oBisect = nullptr;
    CLI::Option* oSeed = nullptr;
    CLI::Option* oBox = nullptr;
    CLI::Option* oWindow = nullptr;
    CLI::Option* oN = nullptr;
    CLI::Option* oXGrid = nullptr;
    CLI::Option* oRGrid = nullptr;
    CLI::Option* oOut = nullptr;
    CLI::Option* oFormat = nullptr;
};

inline void add_common(CLI::App* cmd, CommonBind& b) {
    b.oK = cmd->add_option("--K", b.K, "truncation dimension (>= 2)");
    b.oTol = cmd->add_option("--tol", b.tol, "membership tolerance for sampled points");
    b.oBisect = cmd->add_option("--bisect-tol", b.bisect_tol,
                                "termination tolerance for distance bisection");
    b.oSeed = cmd->add_option("--seed", b.seed, "RNG seed");
    b.oBox = cmd->add_option("--box", b.box, "half-width of the t1 sampling box");
    b.oWindow = cmd->add_option("--window", b.window, "depth of interior samples below caps");
    b.oN = cmd->add_option("--n", b.n, "sample count");
    b.oXGrid = cmd->add_option("--x-grid", b.x_grid, "comma-separated parameter values");
    b.oRGrid = cmd->add_option("--r-grid", b.r_grid, "comma-separated radii");
    cmd->add_option("--config", b.config_path, "flat key=value config file");
    b.oOut = cmd->add_option("--out", b.out_path, "write the report to this path");
    b.oFormat = cmd->add_option("--format", b.format, "output format (json, csv, or text)");
}

inline Config resolve_config(const CommonBind& b) {
    Config cfg;
    if (!b.config_path.empty()) cfg = load_config_file(b.config_path);
    if (b.oK->count()) cfg.K = b.K;
    if (b.oTol->count()) cfg.tol = b.tol;
    if (b.oBisect->count()) cfg.bisect_tol = b.bisect_tol;
    if (b.oSeed->count()) cfg.seed = b.seed;
    if (b.oBox->count()) cfg.box = b.box;
    if (b.oWindow->count()) cfg.window = b.window;
    if (b.oN->count()) cfg.n = b.n;
    if (b.oXGrid->count()) cfg.x_grid = parse_grid(b.x_grid, "--x-grid");
    if (b.oRGrid->count()) cfg.r_grid = parse_grid(b.r_grid, "--r-grid");
    if (b.oOut->count()) cfg.output = b.out_path;
    if (b.oFormat->count()) cfg.format = b.format;
    cfg.validate();
    return cfg;
}

inline std::string pick_format(const Config& cfg, const char* fallback,
                               std::initializer_list<const char*> allowed,
                               const char* cmd) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw std::domain_error(std::string(cmd) + ": unsupported format '" + f + "'");
}

/// Send finished report text to stdout or --out.
inline void emit(const Config& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) out << text;
    else write_text_file(cfg.output, text);
}

inline Family parse_family(const std::string& label, const char* cmd) {
    if (label == "F1") return Family::F1;
    if (label == "F2") return Family::F2;
    if (label == "F") return Family::F;
    throw std::domain_error(std::string(cmd) + ": unknown set '" + label +
                            "' (expected F1, F2, or F)");
}

// Point specs shared by dist and vlsc.
struct PointBind {
    std::vector<int> rays;
    bool zero = false;
    std::vector<std::string> coords;
    int sample_n = 0;
};

inline void add_point_specs(CLI::App* cmd, PointBind& b, bool with_sample) {
    cmd->add_option("--ray", b.rays, "ray index k (point with coordinate k at height k)")
        ->delimiter(',');
    cmd->add_flag("--zero", b.zero, "the zero point");
    cmd->add_option("--coords", b.coords,
                    "explicit point as comma-separated coordinates (zero-padded to K)");
    if (with_sample)
        cmd->add_option("--sample", b.sample_n,
                        "draw this many points from the set at parameter 0");
}

inline std::vector<LabeledPoint> build_points(const PointBind& b, const Config& cfg,
                                              Family fam) {
    std::vector<LabeledPoint> pts;
    for (int k : b.rays) pts.push_back({"e^(" + std::to_string(k) + ")", unit_ray(k, cfg.K)});
    if (b.zero) pts.push_back({"(0,...)", TruncSeq::zero(cfg.K)});
    for (std::size_t i = 0; i < b.coords.size(); ++i) {
        auto vals = parse_grid(b.coords[i], "--coords");
        if (vals.empty() || static_cast<int>(vals.size()) > cfg.K)
            throw std::domain_error("--coords expects 1 to " + std::to_string(cfg.K) +
                                    " values");
        vals.resize(static_cast<std::size_t>(cfg.K), 0.0);
        pts.push_back({"coords[" + std::to_string(i) + "]", TruncSeq(std::move(vals))});
    }
    if (b.sample_n > 0) {
        const SampleSpec spec{b.sample_n, MixStrategy::Mixed, cfg.seed, cfg.box, cfg.window};
        auto drawn = labeled_samples(make_family(fam, 0.0, cfg.K), spec);
        pts.insert(pts.end(), std::make_move_iterator(drawn.begin()),
                   std::make_move_iterator(drawn.end()));
    }
    return pts;
}

// ---- subcommand drivers --------------------------------------------------

struct DistBind {
    CommonBind common;
    PointBind points;
    std::string set_label = "F";
    double x = 0.0;
};

inline int run_dist(const DistBind& b, std::ostream& out) {
    const Config cfg = resolve_config(b.common);
    const std::string format = pick_format(cfg, "text", {"text", "json"}, "dist");
    const Family fam = parse_family(b.set_label, "dist");
    const CorrSet S = make_family(fam, b.x, cfg.K);
    const auto pts = build_points(b.points, cfg, fam);
    if (pts.empty())
        throw std::domain_error("dist: no point given (use --ray, --zero, --coords, or "
                                "--sample)");

    std::vector<DistanceResult> results;
    results.reserve(pts.size());
    for (const auto& p : pts) results.push_back(dist_to_set(S, p.point, cfg.bisect_tol));

    std::ostringstream os;
    if (format == "text") {
        for (std::size_t i = 0; i < pts.size(); ++i)
            os << pts[i].label << ": dist=" << fmt_g17(results[i].dist)
               << " iterations=" << results[i].iterations << "\n";
    } else {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            ordered_json row;
            row["label"] = pts[i].label;
            row["point"] = to_json(pts[i].point);
            row.update(to_json(results[i]));
            rows.push_back(std::move(row));
        }
        ordered_json res;
        res["set"] = family_name(fam);
        res["x"] = b.x;
        res["points"] = std::move(rows);
        os << render_json(report_envelope(cfg, std::move(res)));
    }
    emit(cfg, os.str(), out);
    return kExitOk;
}

struct ModulusBind {
    CommonBind common;
    std::string family_label = "F";
    bool rays = false;
    bool no_rays = false;
};

inline int run_modulus(const ModulusBind& b, std::ostream& out) {
    const Config cfg = resolve_config(b.common);
    const std::string format = pick_format(cfg, "csv", {"csv", "json"}, "modulus");
    const Family fam = parse_family(b.family_label, "modulus");
    std::optional<bool> include_rays;
    if (b.rays) include_rays = true;
    else if (b.no_rays) include_rays = false;

    const SampleSpec spec{cfg.n, MixStrategy::Mixed, cfg.seed, cfg.box, cfg.window};
    const ModulusTable tab =
        hlsc_modulus(fam, cfg.x_grid, spec, cfg.K, cfg.bisect_tol, include_rays);

    std::ostringstream os;
    if (format == "csv") write_modulus_csv(os, tab);
    else os << render_json(report_envelope(cfg, to_json(tab)));
    emit(cfg, os.str(), out);
    return kExitOk;
}

struct CertifyBind {
    CommonBind common;
    double x = 0.0;
    double r = 1.0;
};

inline int run_certify(const CertifyBind& b, std::ostream& out) {
    const Config cfg = resolve_config(b.common);
    pick_format(cfg, "json", {"json"}, "certify");
    const Certificate cert = hlsc_failure_certificate(b.x, b.r, cfg.K, cfg.bisect_tol);
    emit(cfg, render_json(report_envelope(cfg, to_json(cert))), out);
    if (cert.status == "truncation-insufficient") return kExitTruncation;
    return cert.all_checks_pass() ? kExitOk : kExitFail;
}

struct VlscBind {
    CommonBind common;
    PointBind points;
    int x_points = 100;
};

inline int run_vlsc(const VlscBind& b, std::ostream& out) {
    const Config cfg = resolve_config(b.common);
    pick_format(cfg, "json", {"json"}, "vlsc");
    auto targets = build_points(b.points, cfg, Family::F);
    if (targets.empty()) targets = default_vlsc_targets(cfg.K);
    const VlscReport report = vlsc_check(targets, cfg.r_grid, b.x_points, cfg.bisect_tol);
    emit(cfg, render_json(report_envelope(cfg, to_json(report))), out);
    return report.all_pass ? kExitOk : kExitFail;
}

inline int run_suite(const CommonBind& b, std::ostream& out) {
    const Config cfg = resolve_config(b);
    pick_format(cfg, "json", {"json"}, "suite");
    const SuiteReport report = run_proposition_suite(cfg);
    emit(cfg, render_json(report_envelope(cfg, to_json(report))), out);
    return report.all_pass ? kExitOk : kExitFail;
}

} // namespace detail

/// Parse and run. Streams are injectable so tests can run the CLI in-process.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"lower-semicontinuity toolkit for truncated sup-norm sequence sets"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    detail::DistBind dist_b;
    CLI::App* dist_cmd =
        app.add_subcommand("dist", "distance from a point to a set of the family");
    detail::add_common(dist_cmd, dist_b.common);
    detail::add_point_specs(dist_cmd, dist_b.points, /*with_sample=*/true);
    dist_cmd->add_option("--set", dist_b.set_label, "which set: F1, F2, or F");
    dist_cmd->add_option("--x", dist_b.x, "parameter value")->required();

    detail::ModulusBind mod_b;
    CLI::App* mod_cmd = app.add_subcommand(
        "modulus", "sampled lower bounds on the excess of the set at 0 over the set at x");
    detail::add_common(mod_cmd, mod_b.common);
    mod_cmd->add_option("--family", mod_b.family_label, "which family: F1, F2, or F");
    mod_cmd->add_flag("--rays", mod_b.rays, "prepend the rays e^(2)..e^(K)");
    mod_cmd->add_flag("--no-rays", mod_b.no_rays, "exclude the rays")
        ->excludes(mod_cmd->get_option("--rays"));

    detail::CertifyBind cert_b;
    CLI::App* cert_cmd = app.add_subcommand(
        "certify", "certificate that the intersection family fails lower continuity in "
                   "excess at 0");
    detail::add_common(cert_cmd, cert_b.common);
    cert_cmd->add_option("--x", cert_b.x, "parameter value (0 < x <= 0.5)")->required();
    cert_cmd->add_option("--r", cert_b.r, "radius the excess must exceed")->required();

    detail::VlscBind vlsc_b;
    CLI::App* vlsc_cmd = app.add_subcommand(
        "vlsc", "pointwise lower-continuity check of the intersection family at 0");
    detail::add_common(vlsc_cmd, vlsc_b.common);
    detail::add_point_specs(vlsc_cmd, vlsc_b.points, /*with_sample=*/false);
    vlsc_cmd->add_option("--xpoints", vlsc_b.x_points, "grid points per [0, delta)");

    detail::CommonBind suite_b;
    CLI::App* suite_cmd =
        app.add_subcommand("suite", "run every proposition section and emit the report");
    detail::add_common(suite_cmd, suite_b);

    try {
        app.parse(argc, argv);
        if (dist_cmd->parsed()) return detail::run_dist(dist_b, out);
        if (mod_cmd->parsed()) return detail::run_modulus(mod_b, out);
        if (cert_cmd->parsed()) return detail::run_certify(cert_b, out);
        if (vlsc_cmd->parsed()) return detail::run_vlsc(vlsc_b, out);
        if (suite_cmd->parsed()) return detail::run_suite(suite_b, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const io_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const empty_set_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitEmptySet;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace lsc
