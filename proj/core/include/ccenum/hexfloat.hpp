#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

#include "ccenum/interval.hpp"

namespace ccenum {

/// Bit-exact double <-> text round trip via C99 hex float literals.
inline std::string to_hex(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

inline double from_hex(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || (end && *end != '\0'))
    throw InvalidArgument("from_hex: unparseable float literal: " + s);
  return v;
}

}  // namespace ccenum
