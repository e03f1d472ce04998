#pragma once

namespace pgl {
inline constexpr const char* kVersion = "0.1.0";
}
