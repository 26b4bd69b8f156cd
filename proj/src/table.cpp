#include "dqdotto/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace dqdotto {

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

}  // namespace dqdotto
