#pragma once

namespace heis {

inline constexpr const char* kVersion = "0.1.0";

} // namespace heis
