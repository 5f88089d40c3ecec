#pragma once

namespace lcg {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kEngineName = "lcgroups";

// "lcgroups 0.1.0" -- stamped into every verification report.
const char* engine_string();

}  // namespace lcg
