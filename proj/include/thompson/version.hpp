#pragma once

namespace thompson {

// Bumped whenever canonical forms or serialization change; ball caches
// are keyed on it.
inline constexpr const char* kEngineVersion = "fcalc-0.1.0";

}  // namespace thompson
