#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace lsc {

/// Shortest 17-significant-digit decimal form: round-trips every double and
/// is byte-stable across runs, which report determinism depends on.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string join_g17(const std::vector<double>& vs, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) out += sep;
        out += fmt_g17(vs[i]);
    }
    return out;
}

} // namespace lsc
