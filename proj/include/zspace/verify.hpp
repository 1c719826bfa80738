#pragma once

// The property battery: every seminorm law, inequality and embedding the
// library claims, checked on seeded random fixtures.
//
// Each row reports the minimum margin over its cases: bound - observed for an
// inequality, -|a - b| for an equality. A row passes iff every case's margin
// is at least -tolerance (scaled by |bound| for relative checks). INFO rows
// measure without a threshold and report the maximum observed value.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zspace/cube_family.hpp"
#include "zspace/measure.hpp"

namespace zspace {

struct VerifyOptions {
  std::uint64_t seed = 0;
  FamilyConfig family;
  QuadratureSpec quad;
  std::size_t pairs = 200;               // seminorm battery
  std::size_t bounded_functions = 100;   // L^inf bound, sandwich
  std::size_t promotion_functions = 20;  // promotion invariance
  std::size_t vectors = 100;             // per sequence space
  int max_promotion = 6;
};

enum class CheckStatus { Pass, Fail, Info };

struct PropertyResult {
  std::string suite;
  std::string property;
  CheckStatus status;
  std::size_t cases;
  double tolerance;
  double value;  // min margin, or the measured maximum for INFO rows
};

/// suite is one of "all", "bmo", "zachary", "embed".
std::vector<PropertyResult> run_verify(std::string_view suite, const VerifyOptions& options);

bool all_passed(const std::vector<PropertyResult>& results);

std::string_view status_name(CheckStatus s);

}  // namespace zspace
