#pragma once

#include <cstdio>
#include <string>

namespace hsindt::detail {

// Six significant digits, as used in provenance strings and CSV reports.
inline std::string num6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace hsindt::detail
