#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace zspace {

/// Shortest round-trip decimal, locale independent. Infinities print as
/// "inf" / "-inf", NaN as "nan".
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

}  // namespace zspace
