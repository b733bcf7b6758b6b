#pragma once

#include <charconv>
#include <string>

namespace emseq {

// Locale-independent number formatting.

/// Shortest representation that reads back to the same double.
inline std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_fixed(double v, int precision) {
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

}  // namespace emseq
