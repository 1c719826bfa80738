#include "zspace/zachary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zspace/bmo.hpp"
#include "zspace/errors.hpp"

namespace zspace {

double cube_mean(const TameFunction& f, std::size_t k, const FamilyConfig& family,
                 const QuadratureSpec& quad) {
  return average(f, enumerate(family, k).cube, quad);
}

std::vector<CubeTerm> cube_terms(const TameFunction& f, const FamilyConfig& family,
                                 const QuadratureSpec& quad) {
  std::vector<CubeTerm> terms;
  const auto cubes = enumerate_all(family);
  terms.reserve(cubes.size());
  for (const auto& fi : cubes) {
    const CubeSamples s = sample_cube(f, fi.cube, quad);
    const double mean = sample_mean(s.values);
    terms.push_back(CubeTerm{fi.k, mean, mean_abs_deviation(s.values, mean)});
  }
  return terms;
}

ZNormReport z_norm_from_terms(std::vector<CubeTerm> terms, double p, int quad_level) {
  if (!(p >= 1.0)) throw InvalidP("p must satisfy 1 <= p <= inf");
  ZNormReport r{p, 0.0, terms.size(), quad_level, 0.0, std::move(terms), std::nullopt};
  double max_dev = 0.0;
  for (const auto& t : r.per_cube) max_dev = std::max(max_dev, t.deviation);
  if (std::isinf(p)) {
    r.value = max_dev;
    return r;
  }
  CompensatedSum sum;
  for (const auto& t : r.per_cube) {
    const double weight = std::ldexp(1.0, -static_cast<int>(t.k));
    sum.add(weight * (p == 1.0 ? t.deviation : std::pow(t.deviation, p)));
  }
  r.value = p == 1.0 ? sum.value() : std::pow(sum.value(), 1.0 / p);
  r.truncation_bound = std::ldexp(1.0, -static_cast<int>(r.K)) * std::pow(max_dev, p);
  return r;
}

ZNormReport z_norm(const TameFunction& f, double p, const FamilyConfig& family,
                   const QuadratureSpec& quad) {
  if (!(p >= 1.0)) throw InvalidP("p must satisfy 1 <= p <= inf");
  return z_norm_from_terms(cube_terms(f, family, quad), p, quad.level);
}

ZNormReport z_norm_banach(const TameFunction& f, const SpaceTag& space, double p,
                          const FamilyConfig& family, const QuadratureSpec& quad) {
  ZNormReport r = z_norm(f, p, family, quad);
  r.space = space;
  return r;
}

void FunctionSequence::validate() const {
  if (terms.size() < 2) throw DomainError("a Cauchy check needs at least two terms");
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].order() < terms[i - 1].order()) {
      throw InvalidOrder("sequence orders must be nondecreasing (term " + std::to_string(i + 1) +
                         ")");
    }
  }
}

namespace {

double threshold_at(const std::vector<double>& schedule, std::size_t i) {
  if (schedule.empty()) throw DomainError("empty eps schedule");
  return schedule[std::min(i, schedule.size() - 1)];
}

CauchyPair distance_pair(const FunctionSequence& seq, std::size_t m, std::size_t n, double p,
                         const FamilyConfig& family, const QuadratureSpec& quad,
                         double threshold) {
  const double d = z_norm(seq.terms[m - 1] - seq.terms[n - 1], p, family, quad).value;
  return CauchyPair{m, n, d, threshold, d <= threshold};
}

}  // namespace

CauchyReport cauchy_check(const FunctionSequence& seq, double p, const FamilyConfig& family,
                          const QuadratureSpec& quad, const std::vector<double>& eps_schedule,
                          std::optional<Cube> reference) {
  seq.validate();
  const std::size_t n = seq.terms.size();
  CauchyReport r{{}, {}, reference ? *reference : enumerate(family, 1).cube, {}, {}, true};

  for (std::size_t m = 1; m < n; ++m) {
    r.consecutive.push_back(
        distance_pair(seq, m, m + 1, p, family, quad, threshold_at(eps_schedule, m - 1)));
  }
  for (std::size_t m = 1; 2 * m <= n; m *= 2) {
    r.geometric.push_back(
        distance_pair(seq, m, 2 * m, p, family, quad, threshold_at(eps_schedule, m - 1)));
  }
  for (const auto& f : seq.terms) r.integrals.push_back(integrate_tame(f, r.reference, quad));
  for (std::size_t i = 1; i < n; ++i) {
    r.integral_steps.push_back(std::fabs(r.integrals[i] - r.integrals[i - 1]));
  }
  for (const auto& pr : r.consecutive) r.cauchy = r.cauchy && pr.within;
  for (const auto& pr : r.geometric) r.cauchy = r.cauchy && pr.within;
  return r;
}

TameFunction quotient_representative(const TameFunction& f, const FamilyConfig& family,
                                     const QuadratureSpec& quad) {
  const double mean = cube_mean(f, 1, family, quad);
  return (f - mean).with_label("[" + f.label() + "]");
}

}  // namespace zspace
