#pragma once

namespace landau1d {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace landau1d
