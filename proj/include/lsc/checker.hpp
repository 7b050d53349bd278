#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/config.hpp"
#include "lsc/correspondence.hpp"
#include "lsc/distance.hpp"
#include "lsc/format.hpp"
#include "lsc/rng.hpp"
#include "lsc/sample.hpp"
#include "lsc/seq.hpp"
#include "lsc/witness.hpp"

namespace lsc {

// -------------------------------------------------------------------------
// Sampling plans
// -------------------------------------------------------------------------

enum class MixStrategy { Interior, Boundary, Mixed };

inline const char* mix_name(MixStrategy m) {
    switch (m) {
        case MixStrategy::Interior: return "interior";
        case MixStrategy::Boundary: return "boundary";
        default: return "mixed";
    }
}

struct SampleSpec {
    int n = 500;
    MixStrategy strategy = MixStrategy::Mixed;
    std::uint64_t seed = 42;
    double box = 10.0;
    double window = 5.0;
};

struct LabeledPoint {
    std::string label;
    TruncSeq point = TruncSeq::zero(2);
};

/// Draws spec.n samples; Mixed splits into interior (seed) and boundary
/// (seed + 1) halves. Labels identify the draw for excess argmax reporting.
inline std::vector<LabeledPoint> labeled_samples(const CorrSet& S, const SampleSpec& spec) {
    std::vector<LabeledPoint> out;
    out.reserve(static_cast<std::size_t>(spec.n));
    auto add = [&](SampleStrategy st, int count, std::uint64_t seed) {
        const auto pts = sample(S, count, st, seed, spec.box, spec.window);
        for (std::size_t i = 0; i < pts.size(); ++i)
            out.push_back({std::string(strategy_name(st)) + "[" + std::to_string(i) + "]",
                           pts[i]});
    };
    switch (spec.strategy) {
        case MixStrategy::Interior: add(SampleStrategy::Interior, spec.n, spec.seed); break;
        case MixStrategy::Boundary: add(SampleStrategy::Boundary, spec.n, spec.seed); break;
        case MixStrategy::Mixed:
            add(SampleStrategy::Interior, spec.n - spec.n / 2, spec.seed);
            add(SampleStrategy::Boundary, spec.n / 2, spec.seed + 1);
            break;
    }
    return out;
}

/// One projected ray per index k = 2..K, labeled e^(k).
inline std::vector<LabeledPoint> ray_points(const CorrSet& S, double box = 10.0) {
    std::vector<LabeledPoint> out;
    out.reserve(static_cast<std::size_t>(S.K - 1));
    for (int k = 2; k <= S.K; ++k)
        out.push_back({"e^(" + std::to_string(k) + ")", projected_ray(S, k, box)});
    return out;
}

// -------------------------------------------------------------------------
// Modulus table
// -------------------------------------------------------------------------

/// Sampled lower bounds on the excess of family(0) over family(x), one row
/// per grid value. Rays are prepended for the intersection family (they are
/// what makes its excess grow like 2Kx), so the argmax tie-breaks to the
/// deepest ray deterministically.
struct ModulusTable {
    Family family = Family::F;
    int K = 50;
    bool rays_included = false;
    SampleSpec spec;
    std::vector<double> x_grid;
    std::vector<double> excess_lb;
    std::vector<std::string> attained_at;
};

inline ModulusTable hlsc_modulus(Family family, const std::vector<double>& x_grid,
                                 const SampleSpec& spec, int K, double bisect_tol = 1e-12,
                                 std::optional<bool> include_rays = std::nullopt) {
    if (x_grid.empty()) throw std::domain_error("hlsc_modulus: empty x grid");
    for (double x : x_grid)
        if (!(x > 0.0 && x <= 0.5))
            throw std::domain_error("hlsc_modulus: x=" + std::to_string(x) +
                                    " outside (0, 0.5]");
    if (spec.n < 1) throw std::domain_error("hlsc_modulus: spec.n must be >= 1");

    ModulusTable table;
    table.family = family;
    table.K = K;
    table.spec = spec;
    table.rays_included = include_rays.value_or(family == Family::F);
    table.x_grid = x_grid;

    const CorrSet S0 = make_family(family, 0.0, K);
    std::vector<LabeledPoint> A;
    if (table.rays_included) A = ray_points(S0, spec.box);
    {
        auto pts = labeled_samples(S0, spec);
        A.insert(A.end(), std::make_move_iterator(pts.begin()),
                 std::make_move_iterator(pts.end()));
    }

    for (double x : x_grid) {
        const CorrSet B = make_family(family, x, K);
        double best = 0.0;
        std::size_t arg = 0;
        bool first = true;
        for (std::size_t i = 0; i < A.size(); ++i) {
            const double d = dist_to_set(B, A[i].point, bisect_tol).dist;
            if (first || d > best) {
                best = d;
                arg = i;
                first = false;
            }
        }
        table.excess_lb.push_back(best);
        table.attained_at.push_back(A[arg].label);
    }
    return table;
}

// -------------------------------------------------------------------------
// Pointwise lower-continuity check
// -------------------------------------------------------------------------

struct VlscRow {
    std::string label;
    TruncSeq target = TruncSeq::zero(2);
    double r = 0.0;
    double delta = 0.0;
    std::optional<double> M;
    double max_dist = 0.0;
    bool pass = false;
};

struct VlscReport {
    int x_points = 100;
    std::vector<VlscRow> rows;
    bool all_pass = true;
};

/// For each target t in F(0) and radius r: take delta from the witness
/// construction and verify dist(t, F(x)) <= r + 1e-9 on an x_points grid of
/// [0, delta). This is the closed-ball reading of "F(x) comes r-close to
/// every point of F(0) for x near 0".
inline VlscReport vlsc_check(const std::vector<LabeledPoint>& targets,
                             const std::vector<double>& r_grid, int x_points = 100,
                             double bisect_tol = 1e-12) {
    if (targets.empty()) throw std::domain_error("vlsc_check: no targets");
    if (r_grid.empty()) throw std::domain_error("vlsc_check: empty r grid");
    if (x_points < 1) throw std::domain_error("vlsc_check: x_points must be >= 1");

    VlscReport report;
    report.x_points = x_points;
    for (const auto& [label, t] : targets) {
        for (double r : r_grid) {
            VlscRow row;
            row.label = label;
            row.target = t;
            row.r = r;
            const VlscWitness w0 = vlsc_witness(t, r, 0.0);
            row.delta = w0.delta;
            row.M = w0.M;
            double worst = 0.0;
            for (int j = 0; j < x_points; ++j) {
                const double x = row.delta * static_cast<double>(j) /
                                 static_cast<double>(x_points);
                worst = std::max(worst,
                                 dist_to_set(make_F(x, t.dim()), t, bisect_tol).dist);
            }
            row.max_dist = worst;
            row.pass = worst <= r + 1e-9;
            report.all_pass = report.all_pass && row.pass;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

// -------------------------------------------------------------------------
// Proposition suite
// -------------------------------------------------------------------------

struct SuiteSection {
    std::string name;
    bool passed = true;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;
    std::vector<Certificate> certificates;

    void tally(bool ok) {
        ++checks;
        if (!ok) {
            ++failures;
            passed = false;
        }
    }
};

struct SuiteReport {
    Config config;
    std::vector<std::string> warnings;
    std::vector<SuiteSection> sections;
    bool all_pass = true;
};

namespace detail {

/// Smallest dyadic eps in {0.5, 1, 2, ...} with 4x <= eps. Dyadic shifts of
/// eps/2 are exact on every coordinate magnitude in play, which is what lets
/// witness identities be asserted to 1e-15 and membership to tolerance zero.
inline double dyadic_eps_for(double x) {
    double e = 0.5;
    while (e < 4.0 * x) e *= 2.0;
    return e;
}

/// Split a grid into usable values (0, 0.5] and warnings for the rest; the
/// intersection family is empty past 1/2, so those values can only be
/// reported, not checked.
inline std::vector<double> usable_x(const std::vector<double>& grid,
                                    std::vector<std::string>& warnings,
                                    const char* section) {
    std::vector<double> out;
    for (double x : grid) {
        if (x > 0.0 && x <= 0.5) {
            out.push_back(x);
        } else if (x > 0.5) {
            warnings.push_back(std::string(section) + ": x=" + fmt_g17(x) +
                               " skipped (set empty past 0.5)");
        } else {
            warnings.push_back(std::string(section) + ": x=" + fmt_g17(x) +
                               " skipped (excess defined for x > 0)");
        }
    }
    return out;
}

inline SuiteSection suite_branch_cases(const Config& cfg) {
    SuiteSection sec;
    sec.name = "branch-cases";
    Rng rng(cfg.seed + 1);
    const int N = 10000;
    long bad = 0;
    for (int i = 0; i < N; ++i) {
        const double t1 = rng.uniform(-2.0, 2.0);
        const double x = rng.uniform(0.0, 1.0);
        const int k = rng.uniform_int(2, cfg.K);
        const double gap = f2_branch(k, t1, x) - f1_branch(k, t1, x);
        bool ok = true;
        switch (dominant_branch(t1, x, k)) {
            case BranchOrder::Equal: ok = std::fabs(gap) <= 1e-12; break;
            case BranchOrder::F2MinOrEqual: ok = gap <= 1e-12; break;
            case BranchOrder::F1MinOrEqual: ok = gap >= -1e-12; break;
        }
        sec.tally(ok);
        if (!ok) ++bad;

        const double t1p = rng.uniform(0.0, 2.0);
        sec.tally(f1_branch(k, t1p, x) <= f2_branch(k, t1p, x) + 1e-12);
        const double t1m = rng.uniform(-2.0, -x);
        sec.tally(f2_branch(k, t1m, x) <= f1_branch(k, t1m, x) + 1e-12);
    }
    sec.notes.push_back("triples=" + std::to_string(N) +
                        " dominance_mismatches=" + std::to_string(bad));
    return sec;
}

inline SuiteSection suite_f1_hlsc(const Config& cfg, std::vector<std::string>& warnings) {
    SuiteSection sec;
    sec.name = "f1-hlsc";
    const auto grid = usable_x(cfg.x_grid, warnings, "f1-hlsc");
    if (grid.empty()) {
        sec.notes.push_back("no usable x values");
        return sec;
    }
    const SampleSpec spec{cfg.n, MixStrategy::Mixed, cfg.seed, cfg.box, cfg.window};
    const ModulusTable tab = hlsc_modulus(Family::F1, grid, spec, cfg.K, cfg.bisect_tol);
    const SampleSpec wspec{std::min(cfg.n, 100), MixStrategy::Mixed, cfg.seed, cfg.box,
                           cfg.window};
    const auto witnesses_src = labeled_samples(make_F1(0.0, cfg.K), wspec);

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        sec.tally(tab.excess_lb[i] <= x + 1e-9);
        const double eps = dyadic_eps_for(x);
        const CorrSet Fx = make_F1(x, cfg.K);
        for (const auto& [label, s] : witnesses_src) {
            const TruncSeq w = f1_hlsc_witness(s, x, eps);
            sec.tally(contains(Fx, w, 0.0));
            sec.tally(std::fabs(sup_dist(w, s) - eps / 2.0) <= 1e-15);
        }
        sec.certificates.push_back(certify_f1_hlsc(witnesses_src.front().point, x, eps));
        sec.notes.push_back("x=" + fmt_g17(x) + " excess_lb=" + fmt_g17(tab.excess_lb[i]) +
                            " at=" + tab.attained_at[i] + " eps=" + fmt_g17(eps));
    }
    return sec;
}

inline SuiteSection suite_f2_hlsc(const Config& cfg, std::vector<std::string>& warnings) {
    SuiteSection sec;
    sec.name = "f2-hlsc";
    const auto grid = usable_x(cfg.x_grid, warnings, "f2-hlsc");
    if (grid.empty()) {
        sec.notes.push_back("no usable x values");
        return sec;
    }
    const SampleSpec spec{cfg.n, MixStrategy::Mixed, cfg.seed, cfg.box, cfg.window};
    const ModulusTable tab = hlsc_modulus(Family::F2, grid, spec, cfg.K, cfg.bisect_tol);
    const SampleSpec wspec{std::min(cfg.n, 100), MixStrategy::Mixed, cfg.seed, cfg.box,
                           cfg.window};
    const auto witnesses_src = labeled_samples(make_F2(0.0, cfg.K), wspec);

    long case_high = 0, case_low = 0, case_mid = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        sec.tally(tab.excess_lb[i] <= 2.0 * x + 1e-9);
        const double eps = dyadic_eps_for(x);
        const CorrSet Fx = make_F2(x, cfg.K);
        for (const auto& [label, s] : witnesses_src) {
            const double s1 = s.coord(1);
            if (s1 > eps / 2.0) ++case_high;
            else if (s1 < -eps) ++case_low;
            else ++case_mid;
            const TruncSeq w = f2_hlsc_witness(s, x, eps);
            sec.tally(contains(Fx, w, cfg.tol));
            sec.tally(sup_dist(w, s) < eps);
        }
        sec.certificates.push_back(certify_f2_hlsc(witnesses_src.front().point, x, eps));
        sec.notes.push_back("x=" + fmt_g17(x) + " excess_lb=" + fmt_g17(tab.excess_lb[i]) +
                            " at=" + tab.attained_at[i] + " eps=" + fmt_g17(eps));
    }
    sec.notes.push_back("s1_cases high=" + std::to_string(case_high) +
                        " low=" + std::to_string(case_low) +
                        " mid=" + std::to_string(case_mid));
    return sec;
}

inline SuiteSection suite_convexity(const Config& cfg) {
    SuiteSection sec;
    sec.name = "convexity";
    Rng rng(cfg.seed + 4);
    const int combos = 1000;
    for (double x : cfg.x_grid) {
        const CorrSet S = make_F2(x, cfg.K);
        const SampleSpec spec{std::min(cfg.n, 200), MixStrategy::Mixed, cfg.seed, cfg.box,
                              cfg.window};
        const auto pts = labeled_samples(S, spec);
        const int m = static_cast<int>(pts.size());
        double worst = 0.0;
        for (int i = 0; i < combos; ++i) {
            const TruncSeq& a = pts[static_cast<std::size_t>(rng.uniform_int(0, m - 1))].point;
            const TruncSeq& b = pts[static_cast<std::size_t>(rng.uniform_int(0, m - 1))].point;
            const double viol =
                membership_violation(S, convex_combo(a, b, rng.uniform()));
            worst = std::max(worst, viol);
            sec.tally(viol <= cfg.tol);
        }
        sec.notes.push_back("x=" + fmt_g17(x) + " worst_violation=" + fmt_g17(worst));
    }
    return sec;
}

inline SuiteSection suite_intersection(const Config& cfg) {
    SuiteSection sec;
    sec.name = "intersection-identity";
    Rng rng(cfg.seed + 5);
    std::vector<double> grid = {0.0};
    grid.insert(grid.end(), cfg.x_grid.begin(), cfg.x_grid.end());
    const int N = 10000;
    for (double x : grid) {
        const CorrSet A = make_F1(x, cfg.K);
        const CorrSet B = make_F2(x, cfg.K);
        const CorrSet C = make_F(x, cfg.K);
        long mismatches = 0;
        for (int i = 0; i < N; ++i) {
            std::vector<double> c(static_cast<std::size_t>(cfg.K));
            c[0] = rng.uniform(-cfg.box, cfg.box);
            for (int k = 2; k <= cfg.K; ++k)
                c[static_cast<std::size_t>(k - 1)] =
                    rng.uniform(-cfg.box, static_cast<double>(k) + 1.0);
            const TruncSeq v{std::move(c)};
            const bool lhs = contains(A, v, 0.0) && contains(B, v, 0.0);
            const bool rhs = contains(C, v, 0.0);
            if (lhs != rhs) ++mismatches;
            sec.tally(lhs == rhs);
        }
        if (!C.empty_value()) {
            for (const auto& [label, v] :
                 labeled_samples(C, {64, MixStrategy::Mixed, cfg.seed + 6, cfg.box,
                                     cfg.window})) {
                const bool both = contains(A, v, 0.0) && contains(B, v, 0.0);
                sec.tally(both);
                if (!both) ++mismatches;
            }
        }
        sec.notes.push_back("x=" + fmt_g17(x) + " mismatches=" + std::to_string(mismatches));
    }
    return sec;
}

inline SuiteSection suite_hlsc_failure(const Config& cfg,
                                       std::vector<std::string>& warnings) {
    SuiteSection sec;
    sec.name = "hlsc-failure";
    const auto grid = usable_x(cfg.x_grid, warnings, "hlsc-failure");
    std::vector<std::pair<double, double>> cases = {{0.1, 1.0}};
    for (double x : grid)
        for (double r : cfg.r_grid)
            if (!(x == 0.1 && r == 1.0)) cases.emplace_back(x, r);

    for (const auto& [x, r] : cases) {
        const Certificate cert = hlsc_failure_certificate(x, r, cfg.K, cfg.bisect_tol);
        sec.tally(cert.all_checks_pass());
        if (x == 0.1 && r == 1.0 && cfg.K >= 6) {
            sec.tally(cert.status == "certified" && cert.witness_index == 6);
            sec.tally(std::fabs(cert.bound - 1.2) <= 1e-9);
        }
        sec.notes.push_back(
            "x=" + fmt_g17(x) + " r=" + fmt_g17(r) + " -> " +
            (cert.status == "certified"
                 ? "k=" + std::to_string(cert.witness_index) + " dist=" + fmt_g17(cert.bound)
                 : "truncation-insufficient K'=" + std::to_string(cert.required_K)));
        sec.certificates.push_back(cert);
    }
    return sec;
}

inline SuiteSection suite_interior_ball(const Config& cfg) {
    SuiteSection sec;
    sec.name = "interior-ball";
    for (int i = 1; i <= 9; ++i) {
        const double t1 = static_cast<double>(i) / 10.0;
        const Certificate cert = certify_interior_ball(t1, cfg.K);
        sec.tally(cert.all_checks_pass());
        sec.notes.push_back("t1=" + fmt_g17(t1) + " rho=" + fmt_g17(cert.bound) +
                            " checks=" + std::to_string(cert.checks.size()));
        sec.certificates.push_back(cert);
    }
    return sec;
}

inline std::vector<LabeledPoint> default_vlsc_targets(int K) {
    std::vector<LabeledPoint> targets;
    TruncSeq half = TruncSeq::zero(K);
    half.set_coord(1, 0.5);
    targets.push_back({"(0.5,0,...)", half});
    targets.push_back({"(0,...)", TruncSeq::zero(K)});
    if (K >= 2) targets.push_back({"e^(2)", unit_ray(2, K)});
    if (K >= 5) targets.push_back({"e^(5)", unit_ray(5, K)});
    return targets;
}

inline SuiteSection suite_vlsc(const Config& cfg) {
    SuiteSection sec;
    sec.name = "vlsc";
    const auto targets = default_vlsc_targets(cfg.K);
    const VlscReport report = vlsc_check(targets, cfg.r_grid, 100, cfg.bisect_tol);
    for (const auto& row : report.rows) {
        sec.tally(row.pass);
        sec.notes.push_back("target=" + row.label + " r=" + fmt_g17(row.r) +
                            " delta=" + fmt_g17(row.delta) +
                            " max_dist=" + fmt_g17(row.max_dist));
        for (int j = 0; j < 5; ++j) {
            const double x = row.delta * static_cast<double>(j) / 5.0;
            const Certificate cert = certify_vlsc(row.target, row.r, x);
            sec.tally(cert.all_checks_pass());
            if (j == 0) sec.certificates.push_back(cert);
        }
    }
    return sec;
}

} // namespace detail

/// Run all eight proposition sections under one configuration. Failures are
/// recorded in the report, never thrown; the report is deterministic byte
/// for byte for a fixed config (fixed seeds, fixed ordering, no timestamps).
inline SuiteReport run_proposition_suite(const Config& cfg) {
    cfg.validate();
    SuiteReport report;
    report.config = cfg;
    report.sections.push_back(detail::suite_branch_cases(cfg));
    report.sections.push_back(detail::suite_f1_hlsc(cfg, report.warnings));
    report.sections.push_back(detail::suite_f2_hlsc(cfg, report.warnings));
    report.sections.push_back(detail::suite_convexity(cfg));
    report.sections.push_back(detail::suite_intersection(cfg));
    report.sections.push_back(detail::suite_hlsc_failure(cfg, report.warnings));
    report.sections.push_back(detail::suite_interior_ball(cfg));
    report.sections.push_back(detail::suite_vlsc(cfg));
    for (const auto& s : report.sections) report.all_pass = report.all_pass && s.passed;
    return report;
}

} // namespace lsc
