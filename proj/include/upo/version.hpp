#pragma once

namespace upo {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace upo
