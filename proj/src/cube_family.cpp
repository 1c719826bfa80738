#include "zspace/cube_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zspace/errors.hpp"

namespace zspace {

namespace {

int offset_bound(int level) {
  if (level >= 30) return std::numeric_limits<int>::max();
  return std::max((1 << level) - 1, 0);
}

// Appends every j with |j_i| <= bound and sum |j_i| == remaining, in lexicographic order.
void offsets_with_sum(int dim, int bound, int remaining, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == dim) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  const int reach = std::min(bound, remaining);
  for (int j = -reach; j <= reach; ++j) {
    prefix.push_back(j);
    offsets_with_sum(dim, bound, remaining - std::abs(j), prefix, out);
    prefix.pop_back();
  }
}

void append_budget(int budget, std::vector<CubeTuple>& out, std::size_t limit) {
  for (int n = 1; n <= budget; ++n) {
    for (int l = 0; l <= budget - n; ++l) {
      std::vector<std::vector<int>> offsets;
      std::vector<int> prefix;
      offsets_with_sum(n, offset_bound(l), budget - n - l, prefix, offsets);
      for (auto& j : offsets) {
        out.push_back(CubeTuple{n, l, std::move(j)});
        if (out.size() == limit) return;
      }
    }
  }
}

}  // namespace

std::vector<CubeTuple> canonical_prefix(std::size_t count) {
  std::vector<CubeTuple> out;
  out.reserve(count);
  for (int budget = 1; out.size() < count; ++budget) append_budget(budget, out, count);
  return out;
}

CubeTuple canonical_tuple(std::size_t k) {
  if (k < 1) throw OutOfRange("cube family index starts at 1");
  return canonical_prefix(k).back();
}

Cube tuple_cube(const CubeTuple& t, double window) {
  std::vector<double> center(t.offsets.size());
  for (std::size_t i = 0; i < center.size(); ++i) {
    center[i] = std::ldexp(static_cast<double>(t.offsets[i]), -t.level) * window;
  }
  return Cube(std::move(center), std::ldexp(1.0, 1 - t.level) * window);
}

void FamilyConfig::validate() const {
  if (!(window > 0.0) || !std::isfinite(window)) throw OutOfRange("window must be positive");
  if (K < 1) throw OutOfRange("K must be >= 1");
  if (max_dim < 1 || max_level < 0) throw OutOfRange("family bounds must be positive");
  const auto tuples = canonical_prefix(K);
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    if (tuples[k].dim > max_dim || tuples[k].level > max_level) {
      throw OutOfRange("cube " + std::to_string(k + 1) + " (dim " +
                       std::to_string(tuples[k].dim) + ", level " +
                       std::to_string(tuples[k].level) + ") exceeds max_dim " +
                       std::to_string(max_dim) + " / max_level " + std::to_string(max_level) +
                       "; family exhausted before K = " + std::to_string(K));
    }
  }
}

FamilyIndex enumerate(const FamilyConfig& config, std::size_t k) {
  if (k < 1 || k > config.K) {
    throw OutOfRange("cube index " + std::to_string(k) + " outside 1.." + std::to_string(config.K));
  }
  CubeTuple t = canonical_tuple(k);
  if (t.dim > config.max_dim || t.level > config.max_level) {
    throw OutOfRange("cube " + std::to_string(k) + " exceeds the family bounds");
  }
  Cube cube = tuple_cube(t, config.window);
  return FamilyIndex{k, std::move(t), std::move(cube), std::ldexp(1.0, -static_cast<int>(k))};
}

std::vector<FamilyIndex> enumerate_all(const FamilyConfig& config) {
  config.validate();
  auto tuples = canonical_prefix(config.K);
  std::vector<FamilyIndex> out;
  out.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    Cube cube = tuple_cube(tuples[i], config.window);
    out.push_back(FamilyIndex{i + 1, std::move(tuples[i]), std::move(cube),
                              std::ldexp(1.0, -static_cast<int>(i + 1))});
  }
  return out;
}

TameFunction cube_indicator(const Cube& q) {
  Expr body = Expr::number(1.0);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    const double lo = q.lower(i);
    const Expr x = Expr::coord(static_cast<int>(i) + 1);
    Expr side = Expr::unary(Op::Step, x - Expr::number(lo)) -
                Expr::unary(Op::Step, x - Expr::number(lo + q.side()));
    body = i == 0 ? side : body * side;
  }
  return TameFunction(body, static_cast<int>(q.dim()));
}

TameFunction indicator(const FamilyIndex& fi) {
  return cube_indicator(fi.cube).with_label("chi_Q" + std::to_string(fi.k));
}

double TotalWeight::deficit() const { return std::ldexp(1.0, -static_cast<int>(K)); }

double TotalWeight::value() const { return 1.0 - deficit(); }

TotalWeight total_weight(std::size_t K) {
  if (K < 1) throw OutOfRange("K must be >= 1");
  return TotalWeight{K};
}

}  // namespace zspace
