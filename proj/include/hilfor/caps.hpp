#pragma once

#include <cstdlib>
#include <string>

namespace hilfor {

// Enumeration caps keep the exhaustive searches at desk scale. The
// HILFOR_CAP_OVERRIDE environment variable (an integer) raises them all;
// it never lowers a cap.
inline int effective_cap(int default_cap) {
  const char* env = std::getenv("HILFOR_CAP_OVERRIDE");
  if (!env || !*env) return default_cap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return default_cap;
  return v > default_cap ? (int)v : default_cap;
}

}  // namespace hilfor
