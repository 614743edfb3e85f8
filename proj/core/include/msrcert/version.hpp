#pragma once

#include <string_view>

namespace msrcert {

inline constexpr std::string_view kToolName = "msrcert";
inline constexpr std::string_view kToolVersion = "0.1.0";

} // namespace msrcert
