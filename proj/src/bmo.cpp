#include "zspace/bmo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zspace/errors.hpp"

namespace zspace {

double average(const TameFunction& f, const Cube& q, const QuadratureSpec& quad) {
  return sample_mean(sample_cube(f, q, quad).values);
}

double mean_abs_deviation(std::span<const double> values, double center) {
  CompensatedSum sum;
  for (double v : values) sum.add(std::fabs(v - center));
  return sum.value() / static_cast<double>(values.size());
}

double mean_deviation(const TameFunction& f, const Cube& q, const QuadratureSpec& quad) {
  const CubeSamples s = sample_cube(f, q, quad);
  return mean_abs_deviation(s.values, sample_mean(s.values));
}

double sample_median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of no samples");
  const std::size_t n = values.size();
  const std::size_t hi = n / 2;
  std::nth_element(values.begin(), values.begin() + hi, values.end());
  const double upper = values[hi];
  if (n % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + hi);
  return lower + 0.5 * (upper - lower);
}

BestConstant best_constant(const TameFunction& f, const Cube& q, const QuadratureSpec& quad) {
  const CubeSamples s = sample_cube(f, q, quad);
  const double c = sample_median(s.values);
  return BestConstant{c, mean_abs_deviation(s.values, c)};
}

std::vector<Cube> SearchFamily::cubes() const {
  if (k_search == 0) throw EmptySearch("search family has no cubes (K_search = 0)");
  FamilyConfig config = base;
  config.K = k_search;
  const auto family = enumerate_all(config);
  std::vector<Cube> out;
  out.reserve(family.size() * (shifts.size() + 1));
  for (const auto& fi : family) {
    const Cube anchored = fi.cube.translated(origin);
    out.push_back(anchored);
    for (const auto& s : shifts) out.push_back(anchored.translated(s));
  }
  return out;
}

SearchFamily SearchFamily::translated(std::span<const double> h) const {
  SearchFamily out = *this;
  if (out.origin.size() < h.size()) out.origin.resize(h.size(), 0.0);
  for (std::size_t i = 0; i < h.size(); ++i) out.origin[i] += h[i];
  return out;
}

SharpMaximal sharp_maximal(const TameFunction& f, std::span<const Coordinate> x,
                           const SearchFamily& search, const QuadratureSpec& quad) {
  SharpMaximal out;
  for (const Cube& q : search.cubes()) {
    if (!q.contains(x)) continue;
    const double d = mean_deviation(f, q, quad);
    if (!out.covered || d > out.value) {
      out.value = d;
      out.attaining = q;
    }
    out.covered = true;
  }
  return out;
}

BmoEstimate bmo_norm(const TameFunction& f, const SearchFamily& search,
                     const QuadratureSpec& quad) {
  const auto cubes = search.cubes();
  std::size_t best = 0;
  double value = -1.0;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    const double d = mean_deviation(f, cubes[i], quad);
    if (d > value) {
      value = d;
      best = i;
    }
  }
  return BmoEstimate{value, cubes[best], search.k_search, quad.level};
}

double best_constant_norm(const TameFunction& f, const SearchFamily& search,
                          const QuadratureSpec& quad) {
  double value = 0.0;
  for (const Cube& q : search.cubes()) value = std::max(value, best_constant(f, q, quad).value);
  return value;
}

TameFunction translate(const TameFunction& f, std::span<const double> h) {
  if (static_cast<int>(h.size()) > f.order()) {
    throw InvalidShift("shift has " + std::to_string(h.size()) +
                       " components but the function constrains only " +
                       std::to_string(f.order()) + " axes");
  }
  std::vector<double> shift(h.begin(), h.end());
  Expr body = f.body().map_coords([&](int i) {
    const auto axis = static_cast<std::size_t>(i - 1);
    Expr x = Expr::coord(i);
    if (axis < shift.size() && shift[axis] != 0.0) return x - Expr::number(shift[axis]);
    return x;
  });
  std::ostringstream label;
  label << "tau[";
  for (std::size_t i = 0; i < h.size(); ++i) label << (i ? "," : "") << h[i];
  label << "](" << f.label() << ")";
  return TameFunction(std::move(body), f.order(), label.str());
}

}  // namespace zspace
