#pragma once

// Tame functions on R_I^inf and the lambda_inf integral.
//
// A point of R_I^inf is a sequence (x_1, x_2, ...). A tame function of order n
// is f(x) = body(x_1..x_n) * h_n(x_{n+1}, ...), where h_n is the indicator of
// every tail coordinate lying in I = [-1/2, 1/2]. A cube constrains axes
// 1..dim to [c_i - s/2, c_i + s/2) and leaves every later axis spanning I, so
// its measure is s^dim.

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "zspace/expr.hpp"

namespace zspace {

/// Neumaier (improved Kahan) summation. Add order is the caller's contract.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Coordinate {
  int index;  // 1-based axis number
  double value;
};

class Cube {
 public:
  Cube(std::vector<double> center, double side);

  std::size_t dim() const noexcept { return center_.size(); }
  const std::vector<double>& center() const noexcept { return center_; }
  double side() const noexcept { return side_; }

  /// Lower corner on axis `axis` (0-based); axes past dim() report I's edge.
  double lower(std::size_t axis) const noexcept;
  double axis_side(std::size_t axis) const noexcept;

  /// Half-open on the constrained axes, closed I on every other axis.
  bool contains(std::span<const Coordinate> point) const;

  /// Same cube shifted by `h` on its constrained axes (extra entries ignored).
  Cube translated(std::span<const double> h) const;

  friend bool operator==(const Cube&, const Cube&) = default;

 private:
  std::vector<double> center_;
  double side_;
};

double lambda_infty(const Cube& c);

struct QuadratureSpec {
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

  int level = 8;  // 2^level midpoints per integrated axis
  std::uint64_t budget = kDefaultBudget;
};

class TameFunction {
 public:
  /// Throws InvalidOrder if `body` references a coordinate past `order`.
  TameFunction(Expr body, int order, std::string label = {});

  /// Order equals the largest coordinate index in the text.
  static TameFunction parse(std::string_view text);
  static TameFunction constant(double c);

  int order() const noexcept { return order_; }
  const Expr& body() const noexcept { return body_; }
  const std::string& label() const noexcept { return label_; }

  /// Body only; the tail factor h_n is not applied.
  double body_value(std::span<const double> x) const { return (*program_)(x); }

  TameFunction with_label(std::string label) const;

 private:
  Expr body_;
  int order_;
  std::string label_;
  std::shared_ptr<const Program> program_;
};

TameFunction operator+(const TameFunction& f, const TameFunction& g);
TameFunction operator-(const TameFunction& f, const TameFunction& g);
TameFunction operator*(double a, const TameFunction& f);
TameFunction operator+(const TameFunction& f, double c);
TameFunction operator-(const TameFunction& f, double c);

/// f(point); unspecified axes default to 0. Returns 0 when a supplied tail
/// coordinate leaves I. Undefined bodies surface as NaN or inf.
double evaluate(const TameFunction& f, std::span<const Coordinate> point);

/// Raises the order to m without touching the body. Throws InvalidOrder for m < order.
TameFunction promote(const TameFunction& f, int m);

/// Function values at the composite-midpoint nodes of a cube, in lexicographic
/// node order (axis 1 slowest).
///
/// The function is treated as promoted to the cube's dimension. Only axes the
/// body actually reads are gridded: along any other constrained axis the
/// integrand is constant and the midpoint sum is exactly side * value, so
/// those axes contribute their length analytically. Axes the body reads past
/// the cube's dimension range over I.
struct CubeSamples {
  std::vector<double> values;
  int grid_axes = 0;
  int level = 0;
};

CubeSamples sample_cube(const TameFunction& f, const Cube& region, const QuadratureSpec& quad);

/// Compensated mean of the samples in stored order.
double sample_mean(std::span<const double> values);

double integrate_tame(const TameFunction& f, const Cube& region, const QuadratureSpec& quad);

}  // namespace zspace
