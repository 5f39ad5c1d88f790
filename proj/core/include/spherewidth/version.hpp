#pragma once

namespace spherewidth {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kBodyFormatVersion = 1;

}  // namespace spherewidth
