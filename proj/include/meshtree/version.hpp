#pragma once

namespace meshtree {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace meshtree
