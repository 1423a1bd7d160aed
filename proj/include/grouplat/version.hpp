#pragma once

namespace grouplat {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

}  // namespace grouplat
