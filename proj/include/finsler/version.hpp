#pragma once

#define FINSLER_LAB_VERSION "0.1.0"

namespace finsler {
inline const char* version() { return FINSLER_LAB_VERSION; }
}  // namespace finsler
