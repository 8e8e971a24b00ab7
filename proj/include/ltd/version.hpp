#pragma once

namespace ltd {

inline constexpr const char* kToolVersion = "1.0.0";

} // namespace ltd
