#include "zspace/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace zspace {

namespace {

constexpr int kGridBits = 3;  // cell width 2^-3

// Runs of equal value over grid cells [lo_cell, hi_cell) of width 2^-kGridBits.
// Redraws until at least one run is nonzero.
Expr step_runs(FixtureRng& rng, int axis, int lo_cell, int hi_cell, double& sup_abs) {
  const Expr x = Expr::coord(axis);
  std::optional<Expr> body;
  int cell = lo_cell;
  while (cell < hi_cell || !body) {
    if (cell >= hi_cell) cell = lo_cell;
    const int len = static_cast<int>(
        std::min<std::int64_t>(rng.uniform_int(1, 8), hi_cell - cell));
    const bool zero = rng.uniform_int(0, 1) == 0;
    const double v = zero ? 0.0 : rng.dyadic(1, 3);
    if (v != 0.0) {
      const double a = std::ldexp(static_cast<double>(cell), -kGridBits);
      const double b = std::ldexp(static_cast<double>(cell + len), -kGridBits);
      Expr run = Expr::number(v) * (Expr::unary(Op::Step, x - Expr::number(a)) -
                                    Expr::unary(Op::Step, x - Expr::number(b)));
      body = body ? *body + run : run;
      sup_abs = std::max(sup_abs, std::fabs(v));
    }
    cell += len;
  }
  return *body;
}

}  // namespace

std::int64_t FixtureRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

double FixtureRng::dyadic(int range, int bits) {
  const std::int64_t scale = std::int64_t{range} << bits;
  return std::ldexp(static_cast<double>(uniform_int(-scale, scale)), -bits);
}

StepFunction random_step_1d(FixtureRng& rng) {
  double sup = 0.0;
  Expr body = step_runs(rng, 1, -8, 8, sup);
  return StepFunction{TameFunction(body, 1), sup};
}

StepFunction random_step_2d(FixtureRng& rng) {
  double sup_a = 0.0;
  double sup_b = 0.0;
  Expr a = step_runs(rng, 1, -8, 8, sup_a);
  Expr b = step_runs(rng, 2, -8, 8, sup_b);
  return StepFunction{TameFunction(a * b, 2), sup_a * sup_b};
}

double random_scalar(FixtureRng& rng) {
  double a = 0.0;
  while (a == 0.0) a = rng.dyadic(4, 2);
  return a;
}

SequenceVector random_sequence(FixtureRng& rng, const SpaceTag& space) {
  const auto m = static_cast<std::size_t>(rng.uniform_int(1, 12));
  std::vector<double> coords(m);
  for (double& c : coords) c = rng.dyadic(4, 6);
  return SequenceVector{space, std::move(coords)};
}

}  // namespace zspace
