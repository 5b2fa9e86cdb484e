#pragma once

namespace ordu {

inline constexpr const char* version = "0.1.0";

} // namespace ordu
