#pragma once

// Zachary seminorms over the cube family.
//
// With f_ak the mean of f over Q_k and
//   term_k = (1/|Q_k|) int_{Q_k} |f - f_ak| dlambda,
// the seminorm is (sum_{k<=K} 2^-k term_k^p)^(1/p) for finite p and
// max_{k<=K} term_k for p = inf.
//
// The term is sometimes written as (1/lambda[R_I^inf]) int (f - f_ak) over the
// whole space, with no absolute value. Taken literally, that normalizer is
// infinite and the integral over Q_k of f - f_ak vanishes. The
// mean absolute deviation over Q_k is the reading under which the null-space,
// p-vs-inf embedding and BMO domination statements all hold, and it is what
// this module computes. Every value is relative to the fixed family in
// cube_family.hpp.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zspace/banach.hpp"
#include "zspace/cube_family.hpp"
#include "zspace/measure.hpp"

namespace zspace {

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

struct CubeTerm {
  std::size_t k;
  double f_ak;
  double deviation;
};

struct ZNormReport {
  double p;
  double value;
  std::size_t K;
  int quad_level;
  double truncation_bound;  // 2^-K * max deviation^p; 0 for p = inf (no tail claim)
  std::vector<CubeTerm> per_cube;
  std::optional<SpaceTag> space;  // set by z_norm_banach
};

/// f_ak: the average of f over Q_k.
double cube_mean(const TameFunction& f, std::size_t k, const FamilyConfig& family,
                 const QuadratureSpec& quad);

/// (k, f_ak, term_k) for k = 1..K. Shared by every p.
std::vector<CubeTerm> cube_terms(const TameFunction& f, const FamilyConfig& family,
                                 const QuadratureSpec& quad);

/// Aggregates precomputed terms. Throws InvalidP for p < 1 or NaN.
ZNormReport z_norm_from_terms(std::vector<CubeTerm> terms, double p, int quad_level);

ZNormReport z_norm(const TameFunction& f, double p, const FamilyConfig& family,
                   const QuadratureSpec& quad);

/// Z^p over a sequence space, f read as a function of the first S-basis
/// coordinates. The cubes live in the coordinate image, so this is the same
/// computation as z_norm; the report carries the space.
ZNormReport z_norm_banach(const TameFunction& f, const SpaceTag& space, double p,
                          const FamilyConfig& family, const QuadratureSpec& quad);

struct FunctionSequence {
  std::vector<TameFunction> terms;  // orders nondecreasing
  std::string description;

  void validate() const;
};

struct CauchyPair {
  std::size_t m;  // 1-based term indices
  std::size_t n;
  double distance;   // z_norm(f_m - f_n, p)
  double threshold;  // from the eps schedule
  bool within;
};

struct CauchyReport {
  std::vector<CauchyPair> consecutive;
  std::vector<CauchyPair> geometric;  // (n, 2n) for n = 1, 2, 4, ...
  Cube reference;
  std::vector<double> integrals;       // int over `reference` of each term
  std::vector<double> integral_steps;  // |I_{n+1} - I_n|
  bool cauchy;                         // every pair within its threshold
};

/// Pair (m, m+1) is checked against eps_schedule[m-1]; pairs past the end of
/// the schedule reuse its last entry. `reference` defaults to Q_1.
CauchyReport cauchy_check(const FunctionSequence& seq, double p, const FamilyConfig& family,
                          const QuadratureSpec& quad, const std::vector<double>& eps_schedule,
                          std::optional<Cube> reference = std::nullopt);

/// f - f_a1, the representative of f modulo constants.
TameFunction quotient_representative(const TameFunction& f, const FamilyConfig& family,
                                     const QuadratureSpec& quad);

}  // namespace zspace
