#pragma once

namespace sbrace {
inline constexpr const char* kVersion = "0.1.0";
}
