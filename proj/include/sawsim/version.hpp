#pragma once

namespace sawsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sawsim
