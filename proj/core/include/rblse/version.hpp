#pragma once

namespace rblse {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rblse
