#pragma once

#include <cstdio>
#include <string>

namespace sgh::detail {

/// 17 significant digits: round-trips an IEEE double exactly.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace sgh::detail
