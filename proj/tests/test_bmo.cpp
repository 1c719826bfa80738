#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "zspace/bmo.hpp"
#include "zspace/errors.hpp"

using namespace zspace;

namespace {

const QuadratureSpec kQuad{8, QuadratureSpec::kDefaultBudget};

TameFunction sign_fn() { return TameFunction::parse("step(x1) - step(-x1)"); }
TameFunction interval(double a, double b) {
  return TameFunction(parse_expression("step(x1 - " + std::to_string(a) + ") - step(x1 - " +
                                       std::to_string(b) + ")"),
                      1);
}

SearchFamily search(std::size_t k, std::vector<std::vector<double>> shifts = {}) {
  FamilyConfig cfg;
  cfg.K = k;
  return SearchFamily{cfg, k, std::move(shifts), {}};
}

// Mean |f - C| on [a, b) by an n-point midpoint rule, for a 1-D function.
template <class F>
double scan_value(F f, double a, double b, double c, int n) {
  double sum = 0;
  for (int i = 0; i < n; ++i) sum += std::fabs(f(a + (i + 0.5) * (b - a) / n) - c);
  return sum / n;
}

}  // namespace

TEST_CASE("averages") {
  for (double c : {-3.0, 0.0, 0.1, 7.5}) {
    CHECK(average(TameFunction::constant(c), Cube({0.3, -0.2}, 0.5), kQuad) ==
          doctest::Approx(c).epsilon(1e-12));
    CHECK(mean_deviation(TameFunction::constant(c), Cube({1.0}, 2), kQuad) == 0.0);
  }
  CHECK(average(TameFunction::parse("x1"), Cube({0.5}, 1), kQuad) == 0.5);
  CHECK(average(interval(0, 0.5), Cube({0.5}, 1), kQuad) == 0.5);
}

TEST_CASE("mean deviation") {
  CHECK(mean_deviation(sign_fn(), Cube({0}, 2), kQuad) == 1.0);
  CHECK(mean_deviation(interval(0, 0.5), Cube({0.5}, 1), kQuad) == 0.5);
  // Off-center interval [a, b) around 0: fraction p negative, deviation 4p(1-p).
  CHECK(mean_deviation(sign_fn(), Cube({0.25}, 1), kQuad) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("median and best constant") {
  CHECK(sample_median({3, 1, 2, 4}) == 2.5);
  CHECK(sample_median({5, 5}) == 5.0);
  CHECK(mean_abs_deviation(std::vector<double>{1, -1, 3}, 1.0) == doctest::Approx(4.0 / 3.0));

  const BestConstant c = best_constant(TameFunction::constant(2.5), Cube({0}, 1), kQuad);
  CHECK(c.constant == 2.5);
  CHECK(c.value == 0.0);

  const BestConstant s = best_constant(sign_fn(), Cube({0}, 2), kQuad);
  CHECK(s.constant == 0.0);
  CHECK(s.value == 1.0);

  const BestConstant q = best_constant(interval(0, 0.25), Cube({0.5}, 1), kQuad);
  CHECK(q.constant == 0.0);
  CHECK(q.value == 0.25);
}

TEST_CASE("best constant beats a grid scan") {
  struct Case {
    TameFunction f;
    double (*g)(double);
    Cube q;
  };
  const std::vector<Case> cases = {
      {sign_fn(), [](double x) { return x >= 0 ? 1.0 : -1.0; }, Cube({0}, 2)},
      {interval(0, 0.25), [](double x) { return x >= 0 && x < 0.25 ? 1.0 : 0.0; }, Cube({0.5}, 1)},
      {TameFunction::parse("x1*x1"), [](double x) { return x * x; }, Cube({0.25}, 1.5)},
      {TameFunction::parse("exp(x1)"), [](double x) { return std::exp(x); }, Cube({-1}, 2)},
  };
  for (const auto& c : cases) {
    const double a = c.q.lower(0), b = a + c.q.side();
    double best = INFINITY;
    for (int i = -400; i <= 400; ++i) {
      best = std::min(best, scan_value(c.g, a, b, i / 100.0, 1 << 12));
    }
    const BestConstant got = best_constant(c.f, c.q, QuadratureSpec{12, QuadratureSpec::kDefaultBudget});
    CHECK(got.value <= best + 1e-12);
    CHECK(got.value == doctest::Approx(best).epsilon(1e-3));
  }
}

TEST_CASE("sharp maximal function") {
  const Coordinate origin[] = {{1, 0.0}};
  const SharpMaximal zero = sharp_maximal(TameFunction::constant(4), origin, search(16), kQuad);
  CHECK(zero.covered);
  CHECK(zero.value == 0.0);

  const SharpMaximal s = sharp_maximal(sign_fn(), origin, search(64), kQuad);
  CHECK(s.value == 1.0);

  // Search K=2 shifted by 1/2 holds [-1,1), [-1/2,1/2), [-1/2,3/2) and [0,1).
  const Coordinate half[] = {{1, 0.5}};
  const SharpMaximal h = sharp_maximal(interval(0, 1), half, search(2, {{0.5}}), kQuad);
  CHECK(h.value == 0.5);
  REQUIRE(h.attaining);
  CHECK(h.attaining->side() == 2.0);

  const Coordinate far[] = {{1, 5.0}};
  const SharpMaximal none = sharp_maximal(sign_fn(), far, search(8), kQuad);
  CHECK_FALSE(none.covered);
  CHECK(none.value == 0.0);
}

TEST_CASE("bmo of sign matches the interval oracle") {
  const SearchFamily fam = search(64, {{0.5}, {-0.5}});
  double oracle = 0;
  for (const Cube& q : fam.cubes()) {
    const double a = q.lower(0), b = a + q.side();
    const double p = std::clamp(-a / (b - a), 0.0, 1.0);
    oracle = std::max(oracle, 4 * p * (1 - p));
  }
  CHECK(oracle == 1.0);
  const BmoEstimate e = bmo_norm(sign_fn(), fam, kQuad);
  CHECK(std::fabs(e.value - 1.0) < 1e-9);
  CHECK(e.k_search == 64);
  CHECK(e.quad_level == 8);
  CHECK(bmo_norm(TameFunction::constant(3), fam, kQuad).value == 0.0);
  CHECK_THROWS_AS(bmo_norm(sign_fn(), search(0), kQuad), EmptySearch);
}

TEST_CASE("bmo grows with the search family") {
  const TameFunction f = TameFunction::parse("step(x1 - 0.125) * x2");
  double prev = 0;
  for (std::size_t k = 1; k <= 64; k *= 2) {
    const double v = bmo_norm(f, search(k), kQuad).value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("seminorm laws") {
  const SearchFamily fam = search(32);
  const TameFunction f = interval(-0.25, 0.5);
  const TameFunction g = TameFunction::parse("step(x2) * x1");
  const double nf = bmo_norm(f, fam, kQuad).value;
  const double ng = bmo_norm(g, fam, kQuad).value;
  CHECK(bmo_norm(f + g, fam, kQuad).value <= nf + ng + 1e-9);
  CHECK(bmo_norm(-2.5 * f, fam, kQuad).value == doctest::Approx(2.5 * nf).epsilon(1e-12));
  CHECK(bmo_norm(f + 7.0, fam, kQuad).value == doctest::Approx(nf).epsilon(1e-12));
  const double s = best_constant_norm(f, fam, kQuad);
  CHECK(0.5 * nf <= s + 1e-9);
  CHECK(s <= nf + 1e-9);
}

TEST_CASE("translation") {
  const TameFunction chi = interval(0, 1);
  const std::vector<double> h{1.0};
  const Coordinate at[] = {{1, 1.5}};
  CHECK(evaluate(translate(chi, h), at) == 1.0);
  const Coordinate before[] = {{1, 0.5}};
  CHECK(evaluate(translate(chi, h), before) == 0.0);

  const TameFunction f = TameFunction::parse("x1 * step(x2)");
  const std::vector<double> zero{0.0, 0.0};
  CHECK(translate(f, zero).body() == f.body());
  CHECK(translate(f, std::vector<double>{}).body() == f.body());
  CHECK_THROWS_AS(translate(f, std::vector<double>{1, 0, 0}), InvalidShift);

  const SearchFamily fam = search(32, {{0.5}});
  for (const std::vector<double>& shift : {std::vector<double>{0.5}, std::vector<double>{-1.0, 0.25}}) {
    const TameFunction g = TameFunction::parse("step(x1 - 0.125) * (1 + step(x2))");
    CHECK(bmo_norm(translate(g, shift), fam.translated(shift), kQuad).value ==
          doctest::Approx(bmo_norm(g, fam, kQuad).value).epsilon(1e-12));
  }
}
