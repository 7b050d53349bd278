#pragma once

#include <algorithm>
#include <limits>

namespace lsc {

/// Closed interval with +-infinity endpoints allowed. Empty is canonically
/// lo > hi; the default-constructed interval is empty.
struct Interval {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {}

    static Interval everything() {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
    static Interval empty() { return {}; }

    bool is_empty() const { return !(lo <= hi); }
    bool contains(double v) const { return lo <= v && v <= hi; }

    /// Nearest point of the interval to v. Requires a nonempty interval.
    double clamp(double v) const { return std::min(std::max(v, lo), hi); }

    double width() const { return is_empty() ? 0.0 : hi - lo; }
};

inline Interval intersect(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

} // namespace lsc
