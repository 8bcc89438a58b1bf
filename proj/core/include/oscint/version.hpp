#pragma once

namespace oscint {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oscint
