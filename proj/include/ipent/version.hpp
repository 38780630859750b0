#pragma once

namespace ipent {

inline constexpr const char kVersion[] = "0.1.0";
inline constexpr const char kToolName[] = "ipent";

}  // namespace ipent
