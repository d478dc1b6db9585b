#include "sparsetrig/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace sparsetrig {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string format_double(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string();
}

}  // namespace sparsetrig
