#pragma once

// Sequence spaces with their canonical Schauder basis, partial-sum norms and
// the coordinate embedding T(x) = (x_k) into R_I^inf.
//
// Shipped spaces (l^p, 1 <= p < inf, and c0) have monotone bases: the norm of
// P_n x never decreases in n. So sup_n ||P_n x|| is the space's own norm and T
// is an isometry with constant 1. Vectors have finite support, so every
// supremum over n is an attained maximum.

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zspace {

class SpaceTag {
 public:
  enum class Kind { Lp, C0 };

  static SpaceTag lp(double p);
  static SpaceTag c0() { return SpaceTag(Kind::C0, 0.0); }

  /// "l1", "l2", "l2.5", "c0".
  static SpaceTag parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const SpaceTag&, const SpaceTag&) = default;

 private:
  SpaceTag(Kind kind, double p) : kind_(kind), p_(p) {}
  Kind kind_;
  double p_;
};

struct SequenceVector {
  SpaceTag space;
  std::vector<double> coords;  // x_1..x_m, zero beyond

  /// "3,-4" with a tag such as "l2". Throws ParseError.
  static SequenceVector parse(std::string_view coords, std::string_view space);
};

std::vector<double> parse_coords(std::string_view text);

/// ||sum_{k<=n} x_k e_k||. n >= 1.
double partial_sum_norm(std::span<const double> coords, const SpaceTag& space, std::size_t n);
double partial_sum_norm(const SequenceVector& x, std::size_t n);

/// max_{1<=k<=n} ||P_k x||.
double bjn_norm(std::span<const double> coords, const SpaceTag& space, std::size_t n);
double bjn_norm(const SequenceVector& x, std::size_t n);

/// sup_n ||P_n x||, over the coordinate image.
double bj_norm(std::span<const double> coords, const SpaceTag& space);
double bj_norm(const SequenceVector& x);

/// sup_n ||sum_{k<=n} x_k e_k||, the renormed norm on the space itself.
double equivalent_norm(const SequenceVector& x);

/// The space's own norm of x.
double native_norm(const SequenceVector& x);

std::vector<double> embed_T(const SequenceVector& x);
SequenceVector invert_T(std::span<const double> coords, const SpaceTag& space);

}  // namespace zspace
