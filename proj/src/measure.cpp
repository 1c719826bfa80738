#include "zspace/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zspace/errors.hpp"

namespace zspace {

Cube::Cube(std::vector<double> center, double side) : center_(std::move(center)), side_(side) {
  if (center_.empty()) throw DomainError("cube must constrain at least one axis");
  if (!(side_ > 0.0) || !std::isfinite(side_)) throw DomainError("cube side must be positive");
  for (double c : center_) {
    if (!std::isfinite(c)) throw DomainError("cube center must be finite");
  }
}

double Cube::lower(std::size_t axis) const noexcept {
  return axis < center_.size() ? center_[axis] - 0.5 * side_ : -0.5;
}

double Cube::axis_side(std::size_t axis) const noexcept {
  return axis < center_.size() ? side_ : 1.0;
}

bool Cube::contains(std::span<const Coordinate> point) const {
  std::vector<double> x(dim(), 0.0);
  for (const Coordinate& c : point) {
    if (c.index < 1) throw DomainError("coordinate index must be >= 1");
    const auto axis = static_cast<std::size_t>(c.index - 1);
    if (axis < dim()) {
      x[axis] = c.value;
    } else if (c.value < -0.5 || c.value > 0.5) {
      return false;
    }
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    const double lo = lower(i);
    if (x[i] < lo || x[i] >= lo + side_) return false;
  }
  return true;
}

Cube Cube::translated(std::span<const double> h) const {
  std::vector<double> c = center_;
  for (std::size_t i = 0; i < std::min(h.size(), c.size()); ++i) c[i] += h[i];
  return Cube(std::move(c), side_);
}

double lambda_infty(const Cube& c) {
  double v = 1.0;
  for (std::size_t i = 0; i < c.dim(); ++i) v *= c.side();
  return v;
}

TameFunction::TameFunction(Expr body, int order, std::string label)
    : body_(std::move(body)), order_(order), label_(std::move(label)) {
  if (order_ < 0) throw InvalidOrder("order must be nonnegative");
  if (body_.max_index() > order_) {
    throw InvalidOrder("body references x" + std::to_string(body_.max_index()) +
                       " beyond order " + std::to_string(order_));
  }
  if (label_.empty()) label_ = body_.to_string();
  program_ = std::make_shared<const Program>(body_);
}

TameFunction TameFunction::parse(std::string_view text) {
  Expr e = parse_expression(text);
  const int order = e.max_index();
  return TameFunction(std::move(e), order, std::string(text));
}

TameFunction TameFunction::constant(double c) {
  return TameFunction(Expr::number(c), 0);
}

TameFunction TameFunction::with_label(std::string label) const {
  return TameFunction(body_, order_, std::move(label));
}

TameFunction operator+(const TameFunction& f, const TameFunction& g) {
  return TameFunction(f.body() + g.body(), std::max(f.order(), g.order()),
                      "(" + f.label() + ") + (" + g.label() + ")");
}

TameFunction operator-(const TameFunction& f, const TameFunction& g) {
  return TameFunction(f.body() - g.body(), std::max(f.order(), g.order()),
                      "(" + f.label() + ") - (" + g.label() + ")");
}

TameFunction operator*(double a, const TameFunction& f) {
  std::ostringstream label;
  label << a << "*(" << f.label() << ")";
  return TameFunction(Expr::number(a) * f.body(), f.order(), label.str());
}

TameFunction operator+(const TameFunction& f, double c) {
  std::ostringstream label;
  label << "(" << f.label() << ") + " << c;
  return TameFunction(f.body() + Expr::number(c), f.order(), label.str());
}

TameFunction operator-(const TameFunction& f, double c) {
  std::ostringstream label;
  label << "(" << f.label() << ") - " << c;
  return TameFunction(f.body() - Expr::number(c), f.order(), label.str());
}

double evaluate(const TameFunction& f, std::span<const Coordinate> point) {
  const auto n = static_cast<std::size_t>(std::max(f.order(), f.body().max_index()));
  std::vector<double> x(n, 0.0);
  std::vector<bool> seen(n, false);
  for (const Coordinate& c : point) {
    if (c.index < 1) throw DomainError("coordinate index must be >= 1");
    const auto axis = static_cast<std::size_t>(c.index - 1);
    if (axis < n) {
      if (seen[axis]) throw DomainError("duplicate coordinate x" + std::to_string(c.index));
      seen[axis] = true;
      x[axis] = c.value;
    } else if (c.value < -0.5 || c.value > 0.5) {
      return 0.0;
    }
  }
  return f.body_value(x);
}

TameFunction promote(const TameFunction& f, int m) {
  if (m < f.order()) {
    throw InvalidOrder("cannot promote order " + std::to_string(f.order()) + " to " +
                       std::to_string(m));
  }
  return TameFunction(f.body(), m, f.label());
}

CubeSamples sample_cube(const TameFunction& f, const Cube& region, const QuadratureSpec& quad) {
  if (quad.level < 1) throw DomainError("quadrature level must be >= 1");
  const int axes = f.body().max_index();
  CubeSamples out;
  out.grid_axes = axes;
  out.level = quad.level;

  const int log2_count = quad.level * axes;
  if (log2_count >= 63 || (std::uint64_t{1} << log2_count) > quad.budget) {
    throw BudgetExceeded("quadrature needs 2^" + std::to_string(log2_count) +
                         " evaluations, budget is " + std::to_string(quad.budget));
  }
  const std::size_t count = std::size_t{1} << log2_count;
  const std::size_t per_axis = std::size_t{1} << quad.level;
  out.values.resize(count);

  std::vector<double> lower(axes), step(axes);
  for (int a = 0; a < axes; ++a) {
    lower[a] = region.lower(a);
    step[a] = region.axis_side(a) / static_cast<double>(per_axis);
  }

  std::vector<std::size_t> idx(axes, 0);
  std::vector<double> x(axes, 0.0);
  for (int a = 0; a < axes; ++a) x[a] = lower[a] + 0.5 * step[a];

  for (std::size_t node = 0; node < count; ++node) {
    const double v = f.body_value(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "non-finite value " << v << " of '" << f.label() << "' at node (";
      for (int a = 0; a < axes; ++a) msg << (a ? ", " : "") << x[a];
      msg << ")";
      throw NonFiniteSample(msg.str());
    }
    out.values[node] = v;
    // Odometer increment, last axis fastest.
    for (int a = axes - 1; a >= 0; --a) {
      if (++idx[a] < per_axis) {
        x[a] = lower[a] + (static_cast<double>(idx[a]) + 0.5) * step[a];
        break;
      }
      idx[a] = 0;
      x[a] = lower[a] + 0.5 * step[a];
    }
  }
  return out;
}

double sample_mean(std::span<const double> values) {
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  return sum.value() / static_cast<double>(values.size());
}

double integrate_tame(const TameFunction& f, const Cube& region, const QuadratureSpec& quad) {
  const CubeSamples s = sample_cube(f, region, quad);
  return sample_mean(s.values) * lambda_infty(region);
}

}  // namespace zspace
