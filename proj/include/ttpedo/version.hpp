#pragma once

namespace ttpedo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ttpedo
