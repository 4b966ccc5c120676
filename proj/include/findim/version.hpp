#pragma once

namespace findim {
inline constexpr const char* kVersion = "0.1.0";
}
