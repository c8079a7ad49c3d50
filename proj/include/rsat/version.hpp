#pragma once

namespace rsat {

inline constexpr const char* kVersion = "0.1.0";

} // namespace rsat
