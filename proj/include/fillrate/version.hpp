#pragma once

namespace fillrate {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fillrate
