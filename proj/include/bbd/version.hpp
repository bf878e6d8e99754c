#pragma once

#include <string_view>

namespace bbd {

inline constexpr std::string_view kToolName = "bbd";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace bbd
