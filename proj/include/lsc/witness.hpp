#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/correspondence.hpp"
#include "lsc/distance.hpp"
#include "lsc/seq.hpp"

namespace lsc {

// -------------------------------------------------------------------------
// Raw constructions
// -------------------------------------------------------------------------

namespace detail {

inline void check_shift_args(double x, double eps, const char* fn) {
    if (!(eps > 0.0))
        throw std::domain_error(std::string(fn) + ": eps=" + std::to_string(eps) +
                                " must be > 0");
    if (!(x >= 0.0 && x < eps / 2.0))
        throw std::domain_error(std::string(fn) + ": requires 0 <= x < eps/2, got x=" +
                                std::to_string(x) + ", eps/2=" + std::to_string(eps / 2.0));
}

inline void check_source_member(const CorrSet& S0, const TruncSeq& s, const char* fn) {
    if (!contains(S0, s, 0.0))
        throw std::domain_error(std::string(fn) + ": source point not in " + S0.name() +
                                ": " + first_violation(S0, s));
}

} // namespace detail

/// Shift a member s of F1(0) into F1(x): raise t1 by eps/2, lower every other
/// coordinate by eps/2. The result lies in F1(x) whenever x < eps/2 and is at
/// sup distance exactly eps/2 from s (each coordinate moves by exactly that).
inline TruncSeq f1_hlsc_witness(const TruncSeq& s, double x, double eps) {
    detail::check_shift_args(x, eps, "f1_hlsc_witness");
    detail::check_source_member(make_F1(0.0, s.dim()), s, "f1_hlsc_witness");
    const double h = eps / 2.0;
    std::vector<double> c(static_cast<std::size_t>(s.dim()));
    c[0] = s.coord(1) + h;
    for (int k = 2; k <= s.dim(); ++k)
        c[static_cast<std::size_t>(k - 1)] = s.coord(k) - h;
    return TruncSeq(std::move(c));
}

/// Shift a member s of F2(0) into F2(x), case split on s1. Moving t1 away
/// from the cap crossover keeps every coordinate cap valid:
///   s1 >  eps/2: slide t1 down by x (the steep branch gains exactly the
///                slack the slide consumes);
///   s1 < -eps:   slide t1 up by x (the shallow branch's deficit x/k < eps/2);
///   otherwise:   park t1 at -x, where the shallow branch cap is k - 2x/k,
///                and clip coordinates to it (clip depth 2x/k <= x < eps/2).
/// Every case moves each coordinate by strictly less than eps.
inline TruncSeq f2_hlsc_witness(const TruncSeq& s, double x, double eps) {
    detail::check_shift_args(x, eps, "f2_hlsc_witness");
    detail::check_source_member(make_F2(0.0, s.dim()), s, "f2_hlsc_witness");
    std::vector<double> c = s.coords();
    const double s1 = s.coord(1);
    if (s1 > eps / 2.0) {
        c[0] = s1 - x;
    } else if (s1 < -eps) {
        c[0] = s1 + x;
    } else {
        c[0] = -x;
        for (int k = 2; k <= s.dim(); ++k) {
            const double kd = static_cast<double>(k);
            const double cut = kd - (2.0 * x) / kd;
            c[static_cast<std::size_t>(k - 1)] = std::min(s.coord(k), cut);
        }
    }
    return TruncSeq(std::move(c));
}

/// Largest radius rho for which the ball around (t1, 0, 0, ...) stays inside
/// F(0): min((2/3)(1 - t1), t1). The 2/3 factor is the k = 2 cap trading one
/// unit of t1 slack against two of t2; higher k only relaxes the trade.
inline double interior_radius(double t1) {
    if (!(t1 >= 0.0 && t1 <= 1.0))
        throw std::domain_error("interior_radius: t1=" + std::to_string(t1) +
                                " outside [0, 1]");
    return std::min((2.0 / 3.0) * (1.0 - t1), t1);
}

struct VlscWitness {
    TruncSeq s = TruncSeq::zero(2);
    double delta = 0.0;
    std::optional<double> M; // set only by the t1 == 0 construction
};

namespace detail {

/// Neighborhood radius within which the pointwise approximation below is
/// guaranteed, plus the cutoff M used by the t1 == 0 branch rule.
inline std::pair<double, std::optional<double>> vlsc_neighborhood(const TruncSeq& t,
                                                                  double r) {
    const double t1 = t.coord(1);
    if (t1 > 0.0)
        return {0.5 * std::min(t1 / 2.0, r), std::nullopt};
    double M = std::max(sup_norm(t) + 1.0, r + 1.0);
    while (r / (2.0 * M) >= 0.5) M *= 2.0; // never fires for M >= r + 1; kept as a guard
    return {r / (2.0 * M), M};
}

} // namespace detail

/// Point of F(x) within r of a target t in F(0), valid for all x below the
/// returned delta. For t1 > 0 the target slides by x like the f2 witness.
/// For t1 = 0 the target is pushed to t1 = delta; coordinates up to the
/// cutoff M that sit within r of their cap move onto the shrunk cap
/// k(1 - 2 delta), everything else simply drops by r. Coordinates past M
/// drop by exactly r, so the distance equals r whenever K > M.
inline VlscWitness vlsc_witness(const TruncSeq& t, double r, double x) {
    if (!(r > 0.0))
        throw std::domain_error("vlsc_witness: r=" + std::to_string(r) + " must be > 0");
    detail::check_source_member(make_F(0.0, t.dim()), t, "vlsc_witness");
    auto [delta, M] = detail::vlsc_neighborhood(t, r);
    if (!(x >= 0.0 && x < delta))
        throw std::domain_error("vlsc_witness: x=" + std::to_string(x) +
                                " outside the guaranteed neighborhood [0, " +
                                std::to_string(delta) + ")");
    std::vector<double> c = t.coords();
    const double t1 = t.coord(1);
    if (t1 > 0.0) {
        c[0] = t1 - x;
    } else {
        const double cutoff = std::floor(*M);
        c[0] = delta;
        for (int k = 2; k <= t.dim(); ++k) {
            const double kd = static_cast<double>(k);
            const double tk = t.coord(k);
            c[static_cast<std::size_t>(k - 1)] =
                (kd <= cutoff && kd - r <= tk) ? kd * (1.0 - 2.0 * delta) : tk - r;
        }
    }
    return {TruncSeq(std::move(c)), delta, M};
}

// -------------------------------------------------------------------------
// Certificates: replayable records of one verified claim instance
// -------------------------------------------------------------------------

enum class CertKind { HlscWitness, HlscFailure, InteriorBall, VlscWitness };

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::HlscWitness: return "hlsc-witness";
        case CertKind::HlscFailure: return "hlsc-failure";
        case CertKind::InteriorBall: return "interior-ball";
        default: return "vlsc-witness";
    }
}

struct Check {
    std::string name;
    double lhs = 0.0;
    std::string rel; // one of <=, <, >=, >, ==
    double rhs = 0.0;
    bool passed = false;
};

inline Check make_check(std::string name, double lhs, std::string rel, double rhs) {
    bool ok = false;
    if (rel == "<=") ok = lhs <= rhs;
    else if (rel == "<") ok = lhs < rhs;
    else if (rel == ">=") ok = lhs >= rhs;
    else if (rel == ">") ok = lhs > rhs;
    else if (rel == "==") ok = lhs == rhs;
    else throw std::domain_error("make_check: unknown relation " + rel);
    return {std::move(name), lhs, std::move(rel), rhs, ok};
}

/// Inputs + constructed witness + verified inequalities for one instance of
/// a continuity or discontinuity claim. `x` is the set parameter (the ball
/// center t1 for InteriorBall); `radius` is eps or r. Rebuilding from the
/// inputs must reproduce identical checks (see replay_certificate).
struct Certificate {
    CertKind kind = CertKind::HlscWitness;
    Family family = Family::F;
    int K = 2;
    double x = 0.0;
    double radius = 0.0;
    std::optional<TruncSeq> source;
    std::optional<TruncSeq> witness_point;
    int witness_index = 0; // ray index k for HlscFailure
    double bound = 0.0;    // verified distance (HlscWitness/HlscFailure) or delta
    int required_K = 0;    // smallest sufficient K on truncation-insufficient
    std::string status = "certified";
    std::vector<Check> checks;

    bool all_checks_pass() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Membership is certified at the derived-point tolerance 1e-12: cap values
/// at K = 50 magnitudes carry a few ulps (~1e-14) of evaluation round-off,
/// while every construction here keeps a real-arithmetic margin well above
/// 1e-12 away from that noise floor.
inline constexpr double kDerivedPointTol = 1e-12;

inline Certificate certify_f1_hlsc(const TruncSeq& s, double x, double eps) {
    Certificate cert;
    cert.kind = CertKind::HlscWitness;
    cert.family = Family::F1;
    cert.K = s.dim();
    cert.x = x;
    cert.radius = eps;
    cert.source = s;
    TruncSeq w = f1_hlsc_witness(s, x, eps);
    const double d = sup_dist(w, s);
    cert.witness_point = w;
    cert.bound = d;
    cert.checks.push_back(make_check("witness_membership_violation",
                                     membership_violation(make_F1(x, s.dim()), w), "<=",
                                     kDerivedPointTol));
    cert.checks.push_back(make_check("sup_dist_below_eps", d, "<", eps));
    cert.checks.push_back(
        make_check("sup_dist_is_half_eps", std::fabs(d - eps / 2.0), "<=", kDerivedPointTol));
    return cert;
}

inline Certificate certify_f2_hlsc(const TruncSeq& s, double x, double eps) {
    Certificate cert;
    cert.kind = CertKind::HlscWitness;
    cert.family = Family::F2;
    cert.K = s.dim();
    cert.x = x;
    cert.radius = eps;
    cert.source = s;
    TruncSeq w = f2_hlsc_witness(s, x, eps);
    const double d = sup_dist(w, s);
    cert.witness_point = w;
    cert.bound = d;
    cert.checks.push_back(make_check("witness_membership_violation",
                                     membership_violation(make_F2(x, s.dim()), w), "<=",
                                     kDerivedPointTol));
    cert.checks.push_back(make_check("sup_dist_below_eps", d, "<", eps));
    return cert;
}

/// Discontinuity certificate: the smallest ray index k <= K whose distance to
/// F(x) exceeds r, with the closed form 2kx cross-checked by bisection. When
/// every k <= K stays within r, reports the truncation length that would be
/// needed, found by scanning the same predicate the certificate uses.
inline Certificate hlsc_failure_certificate(double x, double r, int K,
                                            double bisect_tol = 1e-12) {
    if (!(x > 0.0))
        throw std::domain_error("hlsc_failure_certificate: x=" + std::to_string(x) +
                                " must be > 0 (the intersection is continuous at 0)");
    if (!(x <= 0.5))
        throw std::domain_error("hlsc_failure_certificate: x=" + std::to_string(x) +
                                " must be <= 0.5 (the intersection is empty beyond)");
    if (!(r > 0.0))
        throw std::domain_error("hlsc_failure_certificate: r must be > 0");
    if (K < 2) throw std::domain_error("hlsc_failure_certificate: K must be >= 2");

    Certificate cert;
    cert.kind = CertKind::HlscFailure;
    cert.family = Family::F;
    cert.K = K;
    cert.x = x;
    cert.radius = r;

    const auto closed_form = [x](int k) { return 2.0 * static_cast<double>(k) * x; };
    int found = 0;
    for (int k = 2; k <= K && found == 0; ++k)
        if (closed_form(k) > r) found = k;

    if (found == 0) {
        int need = K + 1;
        while (!(closed_form(need) > r)) {
            if (need > (1 << 30))
                throw std::runtime_error("hlsc_failure_certificate: no finite K suffices");
            ++need;
        }
        cert.status = "truncation-insufficient";
        cert.required_K = need;
        cert.bound = closed_form(K);
        cert.checks.push_back(
            make_check("max_ray_distance_within_r", closed_form(K), "<=", r));
        cert.checks.push_back(make_check("required_K_exceeds_K",
                                         static_cast<double>(need), ">",
                                         static_cast<double>(K)));
        return cert;
    }

    const TruncSeq ray = unit_ray(found, K);
    const DistanceResult d = dist_to_set(make_F(x, K), ray, bisect_tol);
    cert.witness_index = found;
    cert.witness_point = ray;
    cert.bound = d.dist;
    cert.checks.push_back(make_check("closed_form_exceeds_r", closed_form(found), ">", r));
    cert.checks.push_back(make_check("bisection_matches_closed_form",
                                     std::fabs(d.dist - closed_form(found)), "<=", 1e-9));
    cert.checks.push_back(make_check("witnessed_distance_exceeds_r", d.dist, ">", r));
    if (found > 2)
        cert.checks.push_back(
            make_check("previous_ray_within_r", closed_form(found - 1), "<=", r));
    cert.checks.push_back(make_check("ray_membership_violation_at_0",
                                     membership_violation(make_F(0.0, K), ray), "<=", 0.0));
    return cert;
}

/// Interior-ball certificate around (t1, 0, ..., 0) in F(0): all 2K single
/// coordinate probes at 0.999 * interior_radius are members, and for
/// t1 >= 2/5 the joint probe (t1 + 1.01 rho, 1.01 rho, 0, ...) breaks the
/// k = 2 cap, showing the radius is sharp up to the probe factor.
inline Certificate certify_interior_ball(double t1, int K) {
    if (K < 2) throw std::domain_error("certify_interior_ball: K must be >= 2");
    if (!(t1 > 0.0 && t1 < 1.0))
        throw std::domain_error("certify_interior_ball: t1=" + std::to_string(t1) +
                                " outside (0, 1)");
    const double rho = interior_radius(t1);
    const CorrSet F0 = make_F(0.0, K);

    std::vector<double> base(static_cast<std::size_t>(K), 0.0);
    base[0] = t1;
    const TruncSeq center{std::vector<double>(base)};

    double worst = 0.0;
    for (int k = 1; k <= K; ++k) {
        for (double sign : {+1.0, -1.0}) {
            TruncSeq probe = center;
            probe.set_coord(k, probe.coord(k) + sign * 0.999 * rho);
            worst = std::max(worst, membership_violation(F0, probe));
        }
    }

    Certificate cert;
    cert.kind = CertKind::InteriorBall;
    cert.family = Family::F;
    cert.K = K;
    cert.x = t1;
    cert.radius = rho;
    cert.source = center;
    cert.bound = rho;
    cert.checks.push_back(make_check("max_probe_violation_inside", worst, "<=", 0.0));
    if (t1 >= 0.4) {
        TruncSeq outer = center;
        outer.set_coord(1, t1 + 1.01 * rho);
        outer.set_coord(2, 1.01 * rho);
        cert.checks.push_back(make_check("outer_probe_violation", membership_violation(F0, outer),
                                         ">", 0.0));
    }
    return cert;
}

inline Certificate certify_vlsc(const TruncSeq& t, double r, double x) {
    Certificate cert;
    cert.kind = CertKind::VlscWitness;
    cert.family = Family::F;
    cert.K = t.dim();
    cert.x = x;
    cert.radius = r;
    cert.source = t;
    VlscWitness w = vlsc_witness(t, r, x);
    const double d = sup_dist(w.s, t);
    cert.witness_point = w.s;
    cert.bound = w.delta;
    cert.checks.push_back(make_check("witness_membership_violation",
                                     membership_violation(make_F(x, t.dim()), w.s), "<=",
                                     kDerivedPointTol));
    cert.checks.push_back(make_check("sup_dist_within_r", d, "<=", r + kDerivedPointTol));
    if (w.M && static_cast<double>(t.dim()) > *w.M)
        cert.checks.push_back(
            make_check("sup_dist_equals_r", std::fabs(d - r), "<=", kDerivedPointTol));
    return cert;
}

/// Rebuild a certificate from its recorded inputs. A certificate is replayable
/// when the rebuilt record has the same checks, all passing; this is the
/// verification path for serialized certificates.
inline Certificate replay_certificate(const Certificate& cert) {
    switch (cert.kind) {
        case CertKind::HlscWitness:
            if (!cert.source) throw std::domain_error("replay: missing source point");
            return cert.family == Family::F1
                       ? certify_f1_hlsc(*cert.source, cert.x, cert.radius)
                       : certify_f2_hlsc(*cert.source, cert.x, cert.radius);
        case CertKind::HlscFailure:
            return hlsc_failure_certificate(cert.x, cert.radius, cert.K);
        case CertKind::InteriorBall:
            return certify_interior_ball(cert.x, cert.K);
        default:
            if (!cert.source) throw std::domain_error("replay: missing source point");
            return certify_vlsc(*cert.source, cert.radius, cert.x);
    }
}

inline bool replay_passes(const Certificate& cert) {
    const Certificate again = replay_certificate(cert);
    if (again.checks.size() != cert.checks.size()) return false;
    for (std::size_t i = 0; i < cert.checks.size(); ++i) {
        const Check& a = cert.checks[i];
        const Check& b = again.checks[i];
        if (a.name != b.name || a.rel != b.rel || a.lhs != b.lhs || a.rhs != b.rhs ||
            !b.passed)
            return false;
    }
    return true;
}

} // namespace lsc
