#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace qgc {

inline constexpr std::uint64_t kDefaultMemCap = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 14;

/// Element cap for spans, distance tables and dual groups. Overridden by
/// the QGC_MEM_CAP environment variable when it holds a positive integer.
inline std::uint64_t mem_cap() {
  if (const char* env = std::getenv("QGC_MEM_CAP")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return kDefaultMemCap;
}

/// Largest Hilbert-space dimension the dense oracle accepts.
inline std::uint64_t oracle_cap() {
  const auto cap = mem_cap();
  return cap < kDefaultOracleCap ? cap : kDefaultOracleCap;
}

/// D^n, or UINT64_MAX on overflow.
inline std::uint64_t ipow_saturating(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace qgc
