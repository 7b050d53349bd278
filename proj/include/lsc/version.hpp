#pragma once

namespace lsc {

inline constexpr const char* kToolName = "lsc";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace lsc
