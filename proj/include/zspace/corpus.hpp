#pragma once

// Seeded random fixtures shared by the verify suite and the tests.
//
// Step functions are piecewise constant on a dyadic grid of width 2^-3 and
// take dyadic values. At quadrature level >= 4 every breakpoint is an even
// multiple of half the node spacing of any family cube (shifted by multiples
// of 2^-3 or not) while nodes are odd multiples, so no node lands on a jump.

#include <cstdint>
#include <random>
#include <vector>

#include "zspace/banach.hpp"
#include "zspace/measure.hpp"

namespace zspace {

/// mt19937_64 with platform-independent draws (the std distributions are
/// implementation-defined, which would break byte-identical fixtures).
class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Dyadic value m / 2^bits with m uniform in [-range * 2^bits, range * 2^bits].
  double dyadic(int range, int bits);

 private:
  std::mt19937_64 engine_;
};

struct StepFunction {
  TameFunction fn;
  double sup_abs;  // max |value| over the cells (0 outside them)
};

/// 1-D step function on [-1, 1): runs of 1..8 grid cells, about half of them
/// zero, never identically zero.
StepFunction random_step_1d(FixtureRng& rng);

/// Product a(x1) * b(x2) of two step functions supported in [-1, 1).
StepFunction random_step_2d(FixtureRng& rng);

/// Nonzero dyadic scalar in [-4, 4].
double random_scalar(FixtureRng& rng);

SequenceVector random_sequence(FixtureRng& rng, const SpaceTag& space);

}  // namespace zspace
