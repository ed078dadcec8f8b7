#pragma once

namespace lta {
inline constexpr const char* kVersion = "0.3.0";
}  // namespace lta
