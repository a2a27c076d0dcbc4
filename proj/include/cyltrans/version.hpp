#pragma once

namespace cylt {

inline constexpr const char kVersion[] = "0.1.0";

}  // namespace cylt
