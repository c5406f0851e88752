#pragma once

namespace rmscat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rmscat
