#pragma once

namespace polymo {

inline constexpr const char* kEngineName = "polymo";
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace polymo
