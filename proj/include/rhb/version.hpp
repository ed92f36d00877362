#pragma once

namespace rhb {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rhb
