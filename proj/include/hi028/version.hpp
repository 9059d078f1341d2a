#pragma once

namespace hi028 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hi028
