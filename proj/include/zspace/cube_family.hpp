#pragma once

// The countable cube family {Q_k} with weights t_k = 2^-k.
//
// Each cube is a tuple (n, l, j_1..j_n) with n >= 1, l >= 0 and
// |j_i| <= max(2^l - 1, 0). Its center is j_i * 2^-l * W on axis i and its
// side is 2^(1-l) * W. Tuples are ranked by budget n + l + sum|j_i|, ties
// broken lexicographically on (n, l, j_1, ..., j_n); k is the 1-based rank.
// The ranking does not depend on any bound, so enlarging a family never
// renumbers its existing cubes. docs/cube_enumeration.md tabulates the start.

#include <cstddef>
#include <vector>

#include "zspace/measure.hpp"

namespace zspace {

struct FamilyConfig {
  double window = 1.0;   // W
  int max_dim = 8;       // bound on n for every cube k <= K
  int max_level = 10;    // bound on l for every cube k <= K
  std::size_t K = 64;

  /// Throws OutOfRange unless the first K cubes all respect the bounds.
  void validate() const;
};

struct CubeTuple {
  int dim;
  int level;
  std::vector<int> offsets;  // j_1..j_n

  friend bool operator==(const CubeTuple&, const CubeTuple&) = default;
};

struct FamilyIndex {
  std::size_t k;
  CubeTuple tuple;
  Cube cube;
  double weight;  // 2^-k
};

/// The k-th tuple of the canonical order (k >= 1), independent of any config.
CubeTuple canonical_tuple(std::size_t k);

/// The first `count` tuples of the canonical order.
std::vector<CubeTuple> canonical_prefix(std::size_t count);

Cube tuple_cube(const CubeTuple& t, double window);

FamilyIndex enumerate(const FamilyConfig& config, std::size_t k);

/// enumerate(config, k) for k = 1..config.K.
std::vector<FamilyIndex> enumerate_all(const FamilyConfig& config);

/// chi_Q as a tame function of order Q.dim, 1 on the half-open box.
TameFunction indicator(const FamilyIndex& fi);
TameFunction cube_indicator(const Cube& q);

/// sum_{k<=K} 2^-k = 1 - 2^-K, kept as its deficit so large K stays exact.
struct TotalWeight {
  std::size_t K;

  double deficit() const;  // 2^-K
  double value() const;    // 1 - 2^-K, rounded
};

TotalWeight total_weight(std::size_t K);

}  // namespace zspace
