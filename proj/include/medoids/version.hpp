#pragma once

#include <string_view>

namespace medoids {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr std::string_view version() noexcept { return kVersion; }

}  // namespace medoids
