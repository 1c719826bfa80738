#pragma once

// Mean oscillation over cubes: averages, the sharp maximal function and the
// BMO seminorm.
//
// Every supremum over "all cubes" is taken over a finite SearchFamily, so
// bmo_norm is a lower bound for the true seminorm that grows with the family.

#include <optional>
#include <span>
#include <vector>

#include "zspace/cube_family.hpp"
#include "zspace/measure.hpp"

namespace zspace {

double average(const TameFunction& f, const Cube& q, const QuadratureSpec& quad);

/// (1/|Q|) int_Q |f - avg_Q f|, two passes over the same nodes.
double mean_deviation(const TameFunction& f, const Cube& q, const QuadratureSpec& quad);

/// Compensated mean of |v - center| over the samples, in stored order.
double mean_abs_deviation(std::span<const double> values, double center);

/// Midpoint of the two central order statistics (sample count is even for
/// every grid with at least one axis).
double sample_median(std::vector<double> values);

struct BestConstant {
  double constant;  // median of the node values
  double value;     // mean |f - constant|
};

BestConstant best_constant(const TameFunction& f, const Cube& q, const QuadratureSpec& quad);

struct SearchFamily {
  FamilyConfig base;
  std::size_t k_search = 64;
  std::vector<std::vector<double>> shifts;  // copies of each base cube, besides the unshifted one
  std::vector<double> origin;               // applied to every cube, shifted or not

  /// Base cube k, then its shifted copies, for k = 1..k_search. Throws
  /// EmptySearch when k_search is 0.
  std::vector<Cube> cubes() const;

  /// The same family moved by h: origin += h.
  SearchFamily translated(std::span<const double> h) const;
};

struct SharpMaximal {
  double value = 0.0;
  bool covered = false;  // false when no search cube contains the point
  std::optional<Cube> attaining;
};

SharpMaximal sharp_maximal(const TameFunction& f, std::span<const Coordinate> x,
                           const SearchFamily& search, const QuadratureSpec& quad);

struct BmoEstimate {
  double value;
  Cube attaining_cube;
  std::size_t k_search;
  int quad_level;
};

BmoEstimate bmo_norm(const TameFunction& f, const SearchFamily& search,
                     const QuadratureSpec& quad);

/// max over the search cubes of best_constant(f, Q).value.
double best_constant_norm(const TameFunction& f, const SearchFamily& search,
                          const QuadratureSpec& quad);

/// tau^h f (x) = f(x - h). h may only touch constrained axes (size <= order).
TameFunction translate(const TameFunction& f, std::span<const double> h);

}  // namespace zspace
