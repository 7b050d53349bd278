#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsc/errors.hpp"

namespace lsc {

/// Element of the truncated sup-norm sequence space: the first K coordinates
/// of a real sequence, K >= 2. Coordinates are 1-based in the API (coordinate
/// 1 plays a special role throughout) and must be finite.
class TruncSeq {
public:
    explicit TruncSeq(std::vector<double> coords) : c_(std::move(coords)) {
        if (c_.size() < 2)
            throw std::domain_error("TruncSeq requires K >= 2 coordinates, got " +
                                    std::to_string(c_.size()));
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!std::isfinite(c_[i]))
                throw std::domain_error("TruncSeq coordinate " + std::to_string(i + 1) +
                                        " is not finite");
    }

    static TruncSeq zero(int K) { return TruncSeq(std::vector<double>(check_dim(K), 0.0)); }

    int dim() const { return static_cast<int>(c_.size()); }

    /// 1-based access: coord(1) is t1.
    double coord(int k) const {
        check_index(k);
        return c_[static_cast<std::size_t>(k - 1)];
    }

    void set_coord(int k, double v) {
        check_index(k);
        if (!std::isfinite(v))
            throw std::domain_error("TruncSeq coordinate " + std::to_string(k) +
                                    " is not finite");
        c_[static_cast<std::size_t>(k - 1)] = v;
    }

    const std::vector<double>& coords() const { return c_; }

    bool operator==(const TruncSeq&) const = default;

private:
    static std::size_t check_dim(int K) {
        if (K < 2)
            throw std::domain_error("TruncSeq requires K >= 2, got " + std::to_string(K));
        return static_cast<std::size_t>(K);
    }
    void check_index(int k) const {
        if (k < 1 || k > dim())
            throw std::out_of_range("coordinate index " + std::to_string(k) +
                                    " outside 1.." + std::to_string(dim()));
    }

    std::vector<double> c_;
};

inline void require_same_dim(const TruncSeq& a, const TruncSeq& b, const char* op) {
    if (a.dim() != b.dim())
        throw dimension_mismatch(std::string(op) + ": incompatible truncations K=" +
                                 std::to_string(a.dim()) + " vs K=" + std::to_string(b.dim()));
}

/// Sup norm: max_k |t_k|. Exact floating-point max/abs.
inline double sup_norm(const TruncSeq& t) {
    double m = 0.0;
    for (double v : t.coords()) m = std::max(m, std::fabs(v));
    return m;
}

/// Sup-norm distance between two points of the same truncation.
inline double sup_dist(const TruncSeq& a, const TruncSeq& b) {
    require_same_dim(a, b, "sup_dist");
    double m = 0.0;
    for (int k = 1; k <= a.dim(); ++k) m = std::max(m, std::fabs(a.coord(k) - b.coord(k)));
    return m;
}

/// k-th scaled unit vector: k in coordinate k, zero elsewhere. Requires
/// 2 <= k <= K; these rays witness how caps grow linearly with the index.
inline TruncSeq unit_ray(int k, int K) {
    if (K < 2) throw std::domain_error("unit_ray: K must be >= 2");
    if (k < 2 || k > K)
        throw std::domain_error("unit_ray: k=" + std::to_string(k) + " outside 2..K=" +
                                std::to_string(K));
    std::vector<double> c(static_cast<std::size_t>(K), 0.0);
    c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k);
    return TruncSeq(std::move(c));
}

/// lambda*a + (1-lambda)*b coordinatewise, lambda in [0, 1].
inline TruncSeq convex_combo(const TruncSeq& a, const TruncSeq& b, double lambda) {
    require_same_dim(a, b, "convex_combo");
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("convex_combo: lambda=" + std::to_string(lambda) +
                                " outside [0, 1]");
    std::vector<double> c(static_cast<std::size_t>(a.dim()));
    for (int k = 1; k <= a.dim(); ++k)
        c[static_cast<std::size_t>(k - 1)] = lambda * a.coord(k) + (1.0 - lambda) * b.coord(k);
    return TruncSeq(std::move(c));
}

} // namespace lsc
