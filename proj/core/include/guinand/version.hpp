#pragma once

namespace guinand {
inline constexpr const char* kVersion = "0.1.0";
}
