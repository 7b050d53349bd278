#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsc/correspondence.hpp"
#include "lsc/errors.hpp"
#include "lsc/interval.hpp"
#include "lsc/rng.hpp"
#include "lsc/seq.hpp"

namespace lsc {

enum class SampleStrategy { Interior, Boundary, Ray };

inline const char* strategy_name(SampleStrategy s) {
    switch (s) {
        case SampleStrategy::Interior: return "interior";
        case SampleStrategy::Boundary: return "boundary";
        default: return "ray";
    }
}

/// e^(k) pushed into S: t1 clamped into the (clipped) t1 interval, every
/// coordinate clamped to its cap. Coincides with e^(k) whenever that ray
/// already belongs to S.
inline TruncSeq projected_ray(const CorrSet& S, int k, double box = 10.0) {
    if (S.empty_value())
        throw empty_set_error("projected_ray: empty correspondence value " + S.name());
    if (k < 2 || k > S.K)
        throw std::domain_error("projected_ray: k=" + std::to_string(k) + " outside 2..K=" +
                                std::to_string(S.K));
    const Interval clipped = intersect(S.t1_interval(), {-box, box});
    if (clipped.is_empty())
        throw std::domain_error("projected_ray: box excludes the t1 interval of " + S.name());
    const double t1 = clipped.clamp(0.0);
    std::vector<double> c(static_cast<std::size_t>(S.K));
    c[0] = t1;
    for (int j = 2; j <= S.K; ++j) {
        const double want = (j == k) ? static_cast<double>(k) : 0.0;
        c[static_cast<std::size_t>(j - 1)] = std::min(want, S.cap(j).value(t1));
    }
    return TruncSeq(std::move(c));
}

/// Draw n members of S. Every returned point satisfies contains(S, v, 0)
/// exactly: coordinates are produced from the same cap evaluation the
/// membership test uses.
///
///   interior: t1 uniform in the t1 interval clipped to [-box, box];
///             t_k uniform in [cap_k(t1) - window, cap_k(t1)].
///   boundary: t1 as above, t_k = cap_k(t1) exactly.
///   ray:      the scaled unit vectors e^(k), k cycling through 2..K, each
///             projected into S (t1 clamped, coordinates clamped to caps).
inline std::vector<TruncSeq> sample(const CorrSet& S, int n, SampleStrategy strategy,
                                    std::uint64_t seed, double box = 10.0,
                                    double window = 5.0) {
    if (S.empty_value())
        throw empty_set_error("sample: empty correspondence value " + S.name());
    if (n < 0) throw std::domain_error("sample: n must be >= 0");
    if (!(box > 0.0) || !(window > 0.0))
        throw std::domain_error("sample: box and window must be > 0");

    const Interval clipped = intersect(S.t1_interval(), {-box, box});
    if (clipped.is_empty())
        throw std::domain_error("sample: box [-" + std::to_string(box) + ", " +
                                std::to_string(box) + "] excludes the t1 interval of " +
                                S.name());

    Rng rng(seed);
    std::vector<TruncSeq> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (strategy == SampleStrategy::Ray) {
            out.push_back(projected_ray(S, 2 + i % (S.K - 1), box));
        } else {
            std::vector<double> c(static_cast<std::size_t>(S.K));
            const double t1 = rng.uniform(clipped.lo, clipped.hi);
            c[0] = t1;
            for (int j = 2; j <= S.K; ++j) {
                const double cap = S.cap(j).value(t1);
                c[static_cast<std::size_t>(j - 1)] =
                    (strategy == SampleStrategy::Boundary) ? cap : cap - window * rng.uniform();
            }
            out.emplace_back(std::move(c));
        }
    }
    return out;
}

} // namespace lsc
