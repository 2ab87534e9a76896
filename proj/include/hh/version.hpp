#pragma once

namespace hh {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hh
