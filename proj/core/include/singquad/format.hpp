#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace singquad {

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace singquad
