#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/correspondence.hpp"
#include "lsc/errors.hpp"
#include "lsc/interval.hpp"
#include "lsc/seq.hpp"

namespace lsc {

/// The t1 values from which the closed ball of radius eps around c reaches
/// into S. A point of S within eps of c must have t1 in the box
/// [c1 - eps, c1 + eps] intersected with S's t1 interval, and each cap must
/// leave room for t_k >= c_k - eps; conversely any such t1 admits one
/// (take t_k = min(c_k + eps, cap_k(t1))). The result interval is monotone
/// in eps, which is what makes bisection on eps sound.
inline Interval ball_hits_set(const CorrSet& S, const TruncSeq& c, double eps) {
    if (S.empty_value())
        throw empty_set_error("ball_hits_set: empty correspondence value " + S.name());
    if (c.dim() != S.K)
        throw dimension_mismatch("ball_hits_set: incompatible truncations K=" +
                                 std::to_string(c.dim()) + " vs K=" + std::to_string(S.K));
    if (!(eps >= 0.0)) throw std::domain_error("ball_hits_set: eps must be >= 0");

    const double c1 = c.coord(1);
    Interval I{std::max(S.t1_lo, c1 - eps), std::min(S.t1_hi, c1 + eps)};
    for (int k = 2; k <= S.K && !I.is_empty(); ++k)
        I = intersect(I, S.cap(k).superlevel(c.coord(k) - eps));
    return I.is_empty() ? Interval::empty() : I;
}

struct DistanceResult {
    double dist = 0.0;
    TruncSeq witness = TruncSeq::zero(2);
    Interval t1_interval; // feasible t1 values at radius dist
    int iterations = 0;   // feasibility-oracle invocations (doubling + bisection)
};

namespace detail {

inline TruncSeq reach_witness(const CorrSet& S, const TruncSeq& c, double eps,
                              const Interval& I) {
    std::vector<double> w(static_cast<std::size_t>(S.K));
    const double t1 = I.clamp(c.coord(1));
    w[0] = t1;
    for (int k = 2; k <= S.K; ++k)
        w[static_cast<std::size_t>(k - 1)] = std::min(c.coord(k) + eps, S.cap(k).value(t1));
    return TruncSeq(std::move(w));
}

} // namespace detail

/// Sup-norm distance from c to S by bisection on the ball radius. The
/// feasibility predicate is monotone, so doubling from a cheap upper-bound
/// seed brackets the infimum and bisection pins it to
/// |dist - true| <= bisect_tol * (1 + dist). The returned dist is the
/// feasible end of the bracket, so the witness is a genuine member within
/// dist of c and radius dist - bisect_tol*(1+dist) is certified infeasible.
inline DistanceResult dist_to_set(const CorrSet& S, const TruncSeq& c,
                                  double bisect_tol = 1e-12) {
    if (!(bisect_tol > 0.0)) throw std::domain_error("dist_to_set: bisect_tol must be > 0");
    // Members are their own witness at radius exactly 0. The direct membership
    // test reuses the cap evaluation bit for bit, while the interval route
    // below rounds through superlevel divisions and can miss an exact
    // boundary point by an ulp.
    if (!S.empty_value() && c.dim() == S.K && contains(S, c))
        return {0.0, c, Interval{c.coord(1), c.coord(1)}, 0};
    int iters = 1;
    Interval I0 = ball_hits_set(S, c, 0.0);
    if (!I0.is_empty())
        return {0.0, detail::reach_witness(S, c, 0.0, I0), I0, iters};

    const double c1 = c.coord(1);
    const double off = std::fabs(c1 - Interval{S.t1_lo, S.t1_hi}.clamp(c1));
    double lo = 0.0;
    double hi = std::max(1.0, off);
    for (int guard = 0; ball_hits_set(S, c, hi).is_empty(); ++guard, ++iters) {
        if (guard > 300)
            throw std::runtime_error("dist_to_set: no finite radius reaches " + S.name());
        lo = hi;
        hi *= 2.0;
    }
    ++iters;

    for (int step = 0; step < 200 && hi - lo > bisect_tol * (1.0 + hi); ++step, ++iters) {
        const double mid = 0.5 * (lo + hi);
        if (ball_hits_set(S, c, mid).is_empty())
            lo = mid;
        else
            hi = mid;
    }

    Interval I = ball_hits_set(S, c, hi);
    return {hi, detail::reach_witness(S, c, hi, I), I, iters};
}

struct ExcessResult {
    double value = 0.0;
    std::size_t argmax = 0; // index into the input points; first index wins ties
    DistanceResult worst;
};

/// One-sided excess of a finite point set over B: max over the points of
/// dist_to_set. Requires at least one point.
inline ExcessResult excess(const std::vector<TruncSeq>& points, const CorrSet& B,
                           double bisect_tol = 1e-12) {
    if (points.empty()) throw std::domain_error("excess: empty point list");
    ExcessResult best;
    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        DistanceResult d = dist_to_set(B, points[i], bisect_tol);
        if (first || d.dist > best.value) {
            best = {d.dist, i, d};
            first = false;
        }
    }
    return best;
}

struct GapViolation {
    std::size_t index = 0;
    double dist = 0.0;
};

struct GapReport {
    double eps = 0.0;
    std::vector<GapViolation> violations;

    bool holds() const { return violations.empty(); }
};

/// Points of A at distance more than eps from B, with a 1e-9 guard so
/// bisection round-off on an exactly attained radius never produces a
/// spurious violation. Empty list == sampled inclusion A subset B + ball(eps).
inline GapReport inclusion_gap(const std::vector<TruncSeq>& points, const CorrSet& B,
                               double eps, double bisect_tol = 1e-12) {
    if (!(eps >= 0.0)) throw std::domain_error("inclusion_gap: eps must be >= 0");
    GapReport report;
    report.eps = eps;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double d = dist_to_set(B, points[i], bisect_tol).dist;
        if (d > eps + 1e-9) report.violations.push_back({i, d});
    }
    return report;
}

} // namespace lsc
