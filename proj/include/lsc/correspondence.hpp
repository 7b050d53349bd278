#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/errors.hpp"
#include "lsc/interval.hpp"
#include "lsc/seq.hpp"

namespace lsc {

inline void check_branch_args(int k, double x, const char* fn) {
    if (k < 2)
        throw std::domain_error(std::string(fn) + ": k=" + std::to_string(k) +
                                " must be >= 2");
    if (x < 0.0)
        throw std::domain_error(std::string(fn) + ": x=" + std::to_string(x) +
                                " must be >= 0");
}

/// First cap branch: f1(k; t1, x) = k * (1 - t1 - x).
inline double f1_branch(int k, double t1, double x) {
    check_branch_args(k, x, "f1_branch");
    return static_cast<double>(k) * (1.0 - t1 - x);
}

/// Second cap branch: f2(k; t1, x) = k + (t1 - x) / k.
inline double f2_branch(int k, double t1, double x) {
    check_branch_args(k, x, "f2_branch");
    return static_cast<double>(k) + (t1 - x) / static_cast<double>(k);
}

enum class BranchOrder { F1MinOrEqual, F2MinOrEqual, Equal };

/// Which branch realizes min(f1, f2) at this (t1, x, k). The comparison
/// reduces to k^2 (x + t1) <= x - t1: strictly smaller left side means f2 is
/// strictly below f1, equality means the branches cross. For t1 >= 0 the
/// answer is F1MinOrEqual at every k; for t1 <= -x it is F2MinOrEqual at
/// every k. Between -x and 0 neither branch dominates uniformly in k, so the
/// result is only the pointwise comparison for the given k.
inline BranchOrder dominant_branch(double t1, double x, int k) {
    check_branch_args(k, x, "dominant_branch");
    const double kk = static_cast<double>(k) * static_cast<double>(k);
    const double lhs = kk * (x + t1);
    const double rhs = x - t1;
    if (lhs == rhs) return BranchOrder::Equal;
    return lhs < rhs ? BranchOrder::F2MinOrEqual : BranchOrder::F1MinOrEqual;
}

/// One affine constraint t_k <= intercept + slope * t1.
struct AffinePiece {
    double slope = 0.0;
    double intercept = 0.0;

    double at(double t1) const { return intercept + slope * t1; }
};

/// Upper cap for one coordinate: the pointwise min of affine pieces, hence
/// concave in t1. Membership and sampling must evaluate caps through this
/// function so that all call sites round identically.
struct CoordCap {
    int k = 2;
    std::vector<AffinePiece> pieces;

    double value(double t1) const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& p : pieces) m = std::min(m, p.at(t1));
        return m;
    }

    /// {t1 : value(t1) >= y} as a closed interval (possibly empty or
    /// unbounded). Each piece contributes a half-line or an all/nothing test.
    Interval superlevel(double y) const {
        Interval I = Interval::everything();
        for (const auto& p : pieces) {
            if (p.slope == 0.0) {
                if (!(p.intercept >= y)) return Interval::empty();
            } else if (p.slope > 0.0) {
                I.lo = std::max(I.lo, (y - p.intercept) / p.slope);
            } else {
                I.hi = std::min(I.hi, (y - p.intercept) / p.slope);
            }
            if (I.is_empty()) return Interval::empty();
        }
        return I;
    }
};

enum class Family { F1, F2, F, Custom };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F: return "F";
        default: return "custom";
    }
}

/// One value of a parametric convex set in the truncated space: an interval
/// constraint on t1 and one concave cap per coordinate k = 2..K. The set is
/// { t : t1 in [t1_lo, t1_hi], t_k <= cap_k(t1) }; it is flagged empty when
/// the t1 interval is empty (caps never empty the set on their own because
/// coordinates are unbounded below).
struct CorrSet {
    Family label = Family::Custom;
    double x = 0.0;
    int K = 2;
    double t1_lo = -std::numeric_limits<double>::infinity();
    double t1_hi = std::numeric_limits<double>::infinity();
    std::vector<CoordCap> caps; // caps[i] constrains coordinate i + 2

    bool empty_value() const { return !(t1_lo <= t1_hi); }

    Interval t1_interval() const { return {t1_lo, t1_hi}; }

    const CoordCap& cap(int k) const {
        if (k < 2 || k > K)
            throw std::out_of_range("cap index k=" + std::to_string(k) + " outside 2..K=" +
                                    std::to_string(K));
        return caps[static_cast<std::size_t>(k - 2)];
    }

    std::string name() const {
        return std::string(family_name(label)) + "(" + std::to_string(x) + ")";
    }
};

inline void check_set_args(double x, int K, const char* fn) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error(std::string(fn) + ": x=" + std::to_string(x) +
                                " outside [0, 1]");
    if (K < 2)
        throw std::domain_error(std::string(fn) + ": K=" + std::to_string(K) +
                                " must be >= 2");
}

/// First half-space family: t1 >= x, t_k <= k - x for k >= 2.
inline CorrSet make_F1(double x, int K) {
    check_set_args(x, K, "make_F1");
    CorrSet S;
    S.label = Family::F1;
    S.x = x;
    S.K = K;
    S.t1_lo = x;
    S.t1_hi = std::numeric_limits<double>::infinity();
    S.caps.reserve(static_cast<std::size_t>(K - 1));
    for (int k = 2; k <= K; ++k)
        S.caps.push_back({k, {{0.0, static_cast<double>(k) - x}}});
    return S;
}

/// Second family: t1 <= 1 - x, t_k <= min(f1, f2 branch) for k >= 2. Pieces
/// are stored as (slope, intercept) so both branches are plain affine
/// constraints: f1 -> (-k, k(1-x)), f2 -> (1/k, k - x/k).
inline CorrSet make_F2(double x, int K) {
    check_set_args(x, K, "make_F2");
    CorrSet S;
    S.label = Family::F2;
    S.x = x;
    S.K = K;
    S.t1_lo = -std::numeric_limits<double>::infinity();
    S.t1_hi = 1.0 - x;
    S.caps.reserve(static_cast<std::size_t>(K - 1));
    for (int k = 2; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        S.caps.push_back({k,
                          {{-kd, kd * (1.0 - x)},
                           {1.0 / kd, kd - x / kd}}});
    }
    return S;
}

/// Intersection family in closed form: x <= t1 <= 1 - x, t_k <= k(1-t1-x).
/// On that strip the f1 branch is the active cap of both parents, so the
/// single stored piece is bit-identical to the first piece of make_F2.
/// Empty (and flagged so) exactly when x > 1/2.
inline CorrSet make_F(double x, int K) {
    check_set_args(x, K, "make_F");
    CorrSet S;
    S.label = Family::F;
    S.x = x;
    S.K = K;
    S.t1_lo = x;
    S.t1_hi = 1.0 - x;
    S.caps.reserve(static_cast<std::size_t>(K - 1));
    for (int k = 2; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        S.caps.push_back({k, {{-kd, kd * (1.0 - x)}}});
    }
    return S;
}

inline CorrSet make_family(Family f, double x, int K) {
    switch (f) {
        case Family::F1: return make_F1(x, K);
        case Family::F2: return make_F2(x, K);
        case Family::F: return make_F(x, K);
        default:
            throw std::domain_error("make_family: custom sets have no parametric form");
    }
}

/// Membership with one-sided tolerance: t1 within [t1_lo - tol, t1_hi + tol]
/// and v_k <= cap_k(v1) + tol for every k.
inline bool contains(const CorrSet& S, const TruncSeq& v, double tol = 0.0) {
    if (v.dim() != S.K)
        throw dimension_mismatch("contains: incompatible truncations K=" +
                                 std::to_string(v.dim()) + " vs K=" + std::to_string(S.K));
    if (tol < 0.0) throw std::domain_error("contains: tol must be >= 0");
    const double v1 = v.coord(1);
    if (!(v1 >= S.t1_lo - tol && v1 <= S.t1_hi + tol)) return false;
    for (int k = 2; k <= S.K; ++k)
        if (!(v.coord(k) <= S.cap(k).value(v1) + tol)) return false;
    return true;
}

/// Smallest tolerance at which contains(S, v, tol) holds: the worst
/// constraint violation, clamped at zero for members.
inline double membership_violation(const CorrSet& S, const TruncSeq& v) {
    if (v.dim() != S.K)
        throw dimension_mismatch("membership_violation: incompatible truncations K=" +
                                 std::to_string(v.dim()) + " vs K=" + std::to_string(S.K));
    const double v1 = v.coord(1);
    double worst = std::max(0.0, std::max(S.t1_lo - v1, v1 - S.t1_hi));
    for (int k = 2; k <= S.K; ++k)
        worst = std::max(worst, v.coord(k) - S.cap(k).value(v1));
    return std::max(worst, 0.0);
}

/// First constraint a point violates beyond tol, as human-readable text;
/// empty string when the point is a member. Used for precondition messages.
inline std::string first_violation(const CorrSet& S, const TruncSeq& v, double tol = 0.0) {
    if (v.dim() != S.K)
        return "dimension mismatch: K=" + std::to_string(v.dim()) + " vs K=" +
               std::to_string(S.K);
    const double v1 = v.coord(1);
    if (!(v1 >= S.t1_lo - tol))
        return "t_1 = " + std::to_string(v1) + " < lower bound " + std::to_string(S.t1_lo);
    if (!(v1 <= S.t1_hi + tol))
        return "t_1 = " + std::to_string(v1) + " > upper bound " + std::to_string(S.t1_hi);
    for (int k = 2; k <= S.K; ++k) {
        const double cap = S.cap(k).value(v1);
        if (!(v.coord(k) <= cap + tol))
            return "t_" + std::to_string(k) + " = " + std::to_string(v.coord(k)) +
                   " > cap_" + std::to_string(k) + "(t_1) = " + std::to_string(cap);
    }
    return {};
}

} // namespace lsc
