#pragma once

namespace gm {

inline constexpr const char* kToolName = "gmcheck";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace gm
