#include "scimap/format.hpp"

#include <cmath>
#include <cstdio>

namespace scimap {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // avoids "-0"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace scimap
