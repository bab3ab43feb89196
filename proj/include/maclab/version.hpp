#pragma once

namespace maclab {

// Bumped whenever a cached result could change; part of every cache key.
inline constexpr const char* code_version = "1.0.0";

}  // namespace maclab
