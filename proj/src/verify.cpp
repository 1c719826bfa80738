#include "zspace/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "zspace/banach.hpp"
#include "zspace/bmo.hpp"
#include "zspace/corpus.hpp"
#include "zspace/errors.hpp"
#include "zspace/zachary.hpp"

namespace zspace {

namespace {

constexpr std::array<double, 4> kPs{1.0, 2.0, 4.0, kInfP};

std::string p_name(double p) {
  if (std::isinf(p)) return "inf";
  return std::to_string(static_cast<int>(p));
}

class Check {
 public:
  Check(std::string suite, std::string property, double tolerance)
      : suite_(std::move(suite)), property_(std::move(property)), tolerance_(tolerance) {}

  /// lhs <= rhs + tolerance
  void le(double lhs, double rhs) { record(rhs - lhs, tolerance_); }

  /// |a - b| <= tolerance
  void eq(double a, double b) { record(0.0 - std::fabs(a - b), tolerance_); }

  /// |a - b| <= tolerance * |b|
  void eq_rel(double a, double b) { record(0.0 - std::fabs(a - b), tolerance_ * std::fabs(b)); }

  /// lhs <= rhs * (1 + tolerance)
  void le_rel(double lhs, double rhs) { record(rhs - lhs, tolerance_ * std::fabs(rhs)); }

  void holds(bool ok) { record(ok ? 0.0 : -1.0, 0.0); }

  PropertyResult result() const {
    return {suite_,   property_,  ok_ ? CheckStatus::Pass : CheckStatus::Fail,
            cases_,   tolerance_, cases_ == 0 ? 0.0 : min_margin_};
  }

 private:
  void record(double margin, double allowance) {
    ++cases_;
    if (std::isnan(margin) || margin + allowance < 0.0) ok_ = false;
    if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
    min_margin_ = std::min(min_margin_, margin);
  }

  std::string suite_;
  std::string property_;
  double tolerance_;
  std::size_t cases_ = 0;
  double min_margin_ = std::numeric_limits<double>::infinity();
  bool ok_ = true;
};

SearchFamily verify_search(const VerifyOptions& o) {
  const double w = o.family.window;
  return SearchFamily{o.family, o.family.K, {{0.5 * w}, {-0.5 * w}}, {}};
}

bool node_constant(const TameFunction& f, const Cube& q, const QuadratureSpec& quad) {
  const CubeSamples s = sample_cube(f, q, quad);
  const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
  return *lo == *hi;
}

std::vector<std::size_t> k_ladder(std::size_t K) {
  std::vector<std::size_t> ks;
  for (std::size_t k = 1; k < K; k *= 2) ks.push_back(k);
  ks.push_back(K);
  return ks;
}

void bmo_suite(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  FixtureRng rng(o.seed ^ 0x626d6fULL);
  const SearchFamily search = verify_search(o);
  const auto cubes = search.cubes();

  Check constants("bmo", "constant_zero", 0.0);
  for (int i = 0; i < 5; ++i) {
    const double c = i == 0 ? 0.0 : rng.dyadic(8, 4);
    constants.eq(bmo_norm(TameFunction::constant(c), search, o.quad).value, 0.0);
  }

  Check homogeneity("bmo", "homogeneity", 1e-12);
  Check triangle("bmo", "triangle", 1e-9);
  Check positive("bmo", "nonconstant_iff_positive", 0.0);
  for (std::size_t i = 0; i < o.pairs; ++i) {
    const TameFunction f = random_step_1d(rng).fn;
    const TameFunction g = random_step_1d(rng).fn;
    const double alpha = random_scalar(rng);
    const double bf = bmo_norm(f, search, o.quad).value;
    const double bg = bmo_norm(g, search, o.quad).value;
    homogeneity.eq_rel(bmo_norm(alpha * f, search, o.quad).value, std::fabs(alpha) * bf);
    triangle.le(bmo_norm(f + g, search, o.quad).value, bf + bg);
    bool varies = false;
    for (const Cube& q : cubes) {
      if (!node_constant(f, q, o.quad)) {
        varies = true;
        break;
      }
    }
    positive.holds(varies == (bf > 0.0));
  }

  Check linf("bmo", "linf_bound", 1e-9);
  Check lower("bmo", "sandwich_lower", 1e-9);
  Check upper("bmo", "sandwich_upper", 1e-9);
  Check bounded("bmo", "bounded_constants", 1e-9);
  for (std::size_t i = 0; i < o.bounded_functions; ++i) {
    const StepFunction sf = random_step_1d(rng);
    const double b = bmo_norm(sf.fn, search, o.quad).value;
    linf.le(b, 2.0 * sf.sup_abs);
    const double s = best_constant_norm(sf.fn, search, o.quad);
    lower.le(0.5 * b, s);
    upper.le(s, b);
    // Any per-cube constant works; take the first node value.
    double a = 0.0;
    for (const Cube& q : cubes) {
      const CubeSamples smp = sample_cube(sf.fn, q, o.quad);
      a = std::max(a, mean_abs_deviation(smp.values, smp.values.front()));
    }
    bounded.le(b, 2.0 * a);
  }

  Check translation("bmo", "translation_invariance", 1e-12);
  for (std::size_t i = 0; i < std::min<std::size_t>(o.pairs, 50); ++i) {
    const TameFunction f = random_step_1d(rng).fn;
    const std::vector<double> h{rng.dyadic(1, 3) * o.family.window};
    const double moved = bmo_norm(translate(f, h), search.translated(h), o.quad).value;
    translation.eq(moved, bmo_norm(f, search, o.quad).value);
  }

  Check monotone("bmo", "monotone_in_k_search", 0.0);
  for (int i = 0; i < 20; ++i) {
    const TameFunction f = random_step_1d(rng).fn;
    double prev = 0.0;
    for (std::size_t k : k_ladder(search.k_search)) {
      SearchFamily sub = search;
      sub.k_search = k;
      const double v = bmo_norm(f, sub, o.quad).value;
      monotone.le(prev, v);
      prev = v;
    }
  }

  for (const Check* c : {&constants, &homogeneity, &triangle, &positive, &linf, &lower, &upper,
                         &bounded, &translation, &monotone}) {
    out.push_back(c->result());
  }
}

void zachary_suite(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  FixtureRng rng(o.seed ^ 0x7a6163ULL);
  const SearchFamily search = verify_search(o);
  const auto cubes = enumerate_all(o.family);
  auto terms = [&](const TameFunction& f) { return cube_terms(f, o.family, o.quad); };
  auto norm = [&](const std::vector<CubeTerm>& t, double p) {
    return z_norm_from_terms(t, p, o.quad.level).value;
  };

  Check constants("zachary", "constant_zero", 0.0);
  for (int i = 0; i < 5; ++i) {
    const double c = i == 0 ? 0.0 : rng.dyadic(8, 4);
    for (double p : kPs) constants.eq(z_norm(TameFunction::constant(c), p, o.family, o.quad).value, 0.0);
  }

  std::vector<Check> homogeneity, triangle, embed;
  for (double p : kPs) {
    homogeneity.emplace_back("zachary", "homogeneity[p=" + p_name(p) + "]", 1e-12);
    triangle.emplace_back("zachary", "triangle[p=" + p_name(p) + "]", 1e-9);
    if (!std::isinf(p)) embed.emplace_back("zachary", "zp_le_zinf[p=" + p_name(p) + "]", 1e-12);
  }
  Check shift("zachary", "constant_shift_invariance", 1e-12);
  Check null("zachary", "null_iff_node_constant", 0.0);
  Check bmo_dom("zachary", "zinf_le_bmo", 1e-9);
  double parallelogram = 0.0;
  std::size_t parallelogram_cases = 0;

  for (std::size_t i = 0; i < o.pairs; ++i) {
    const TameFunction f = random_step_1d(rng).fn;
    const TameFunction g = random_step_1d(rng).fn;
    const double alpha = random_scalar(rng);
    const auto tf = terms(f);
    const auto tg = terms(g);
    const auto tfg = terms(f + g);
    const auto taf = terms(alpha * f);
    for (std::size_t j = 0; j < kPs.size(); ++j) {
      const double p = kPs[j];
      const double zf = norm(tf, p);
      homogeneity[j].eq_rel(norm(taf, p), std::fabs(alpha) * zf);
      triangle[j].le(norm(tfg, p), zf + norm(tg, p));
      if (!std::isinf(p)) embed[j].le(zf, norm(tf, kInfP));
    }
    shift.eq(norm(terms(f + 5.0), 2.0), norm(tf, 2.0));

    bool all_constant = true;
    for (const auto& fi : cubes) {
      if (!node_constant(f, fi.cube, o.quad)) {
        all_constant = false;
        break;
      }
    }
    null.holds(all_constant == (norm(tf, 1.0) == 0.0));

    if (i < 50) {
      bmo_dom.le(norm(tf, kInfP), bmo_norm(f, search, o.quad).value);
      const double a = norm(tf, 2.0);
      const double b = norm(tg, 2.0);
      const double s = norm(tfg, 2.0);
      const double d = norm(terms(f - g), 2.0);
      const double scale = 2.0 * (a * a + b * b);
      if (scale > 0.0) {
        parallelogram = std::max(parallelogram, std::fabs(s * s + d * d - scale) / scale);
        ++parallelogram_cases;
      }
    }
  }

  Check promotion("zachary", "promotion_invariance", 0.0);
  Check banach("zachary", "banach_equivalence", 0.0);
  Check monotone("zachary", "monotone_in_K", 0.0);
  Check quotient("zachary", "quotient_invariance", 1e-12);
  const std::array<SpaceTag, 3> spaces{SpaceTag::lp(1.0), SpaceTag::lp(2.0), SpaceTag::c0()};
  for (std::size_t i = 0; i < o.promotion_functions; ++i) {
    const TameFunction f = i % 4 == 3 ? random_step_2d(rng).fn : random_step_1d(rng).fn;
    const auto base = terms(f);
    for (int m = f.order() + 1; m <= o.max_promotion; ++m) {
      const auto promoted = terms(promote(f, m));
      for (double p : {1.0, 2.0, kInfP}) promotion.eq(norm(promoted, p), norm(base, p));
    }
    if (f.order() != 1) continue;
    for (const SpaceTag& space : spaces) {
      for (double p : kPs) {
        banach.eq(z_norm_banach(f, space, p, o.family, o.quad).value,
                  z_norm(f, p, o.family, o.quad).value);
      }
    }
    for (double p : {1.0, 2.0}) {
      double prev = 0.0;
      for (std::size_t k : k_ladder(o.family.K)) {
        FamilyConfig sub = o.family;
        sub.K = k;
        const double v = z_norm(f, p, sub, o.quad).value;
        monotone.le(prev, v);
        prev = v;
      }
    }
    quotient.eq(z_norm(quotient_representative(f, o.family, o.quad), 2.0, o.family, o.quad).value,
                norm(base, 2.0));
  }

  Check cauchy_d("zachary", "cauchy_distance_ratio", 1e-9);
  Check cauchy_i("zachary", "cauchy_integral_ratio", 1e-9);
  const Cube reference = cubes.front().cube;
  for (int made = 0; made < 5;) {
    const TameFunction g = random_step_1d(rng).fn;
    if (integrate_tame(g, reference, o.quad) == 0.0 ||
        z_norm(g, 1.0, o.family, o.quad).value == 0.0) {
      continue;
    }
    ++made;
    FunctionSequence seq{{}, "(1 - 2^-n) g"};
    for (int n = 1; n <= 10; ++n) seq.terms.push_back((1.0 - std::ldexp(1.0, -n)) * g);
    const CauchyReport r = cauchy_check(seq, 1.0, o.family, o.quad, {1.0}, reference);
    for (std::size_t j = 1; j < r.consecutive.size(); ++j) {
      cauchy_d.eq(r.consecutive[j].distance / r.consecutive[j - 1].distance, 0.5);
    }
    for (std::size_t j = 1; j < r.integral_steps.size(); ++j) {
      cauchy_i.eq(r.integral_steps[j] / r.integral_steps[j - 1], 0.5);
    }
  }

  out.push_back(constants.result());
  for (const auto& c : homogeneity) out.push_back(c.result());
  for (const auto& c : triangle) out.push_back(c.result());
  out.push_back(shift.result());
  out.push_back(null.result());
  for (const auto& c : embed) out.push_back(c.result());
  for (const Check* c : {&bmo_dom, &promotion, &banach, &monotone, &quotient, &cauchy_d, &cauchy_i}) {
    out.push_back(c->result());
  }
  out.push_back(PropertyResult{"zachary", "parallelogram_defect[p=2]", CheckStatus::Info,
                               parallelogram_cases, 0.0, parallelogram});
}

void embed_suite(const VerifyOptions& o, std::vector<PropertyResult>& out) {
  FixtureRng rng(o.seed ^ 0x656d62ULL);
  const std::array<SpaceTag, 4> spaces{SpaceTag::lp(1.0), SpaceTag::lp(2.0), SpaceTag::lp(4.0),
                                       SpaceTag::c0()};
  for (const SpaceTag& space : spaces) {
    const std::string tag = "[" + space.name() + "]";
    Check isometry("embed", "isometry" + tag, 1e-12);
    Check identical("embed", "bj_equals_equivalent" + tag, 0.0);
    Check monotone("embed", "partial_sums_monotone" + tag, 0.0);
    Check homogeneity("embed", "homogeneity" + tag, 1e-12);
    Check triangle("embed", "triangle" + tag, 1e-12);
    Check linear("embed", "T_linear" + tag, 0.0);
    Check round_trip("embed", "T_round_trip" + tag, 0.0);
    for (std::size_t i = 0; i < o.vectors; ++i) {
      const SequenceVector x = random_sequence(rng, space);
      const SequenceVector y = random_sequence(rng, space);
      const double a = random_scalar(rng);
      const double b = random_scalar(rng);

      const double native = native_norm(x);
      const double via_t = bj_norm(embed_T(x), space);
      isometry.eq_rel(via_t, native);
      isometry.eq_rel(equivalent_norm(x), native);
      identical.eq(bj_norm(x), equivalent_norm(x));

      for (std::size_t n = 1; n <= x.coords.size(); ++n) {
        monotone.le(partial_sum_norm(x, n), partial_sum_norm(x, n + 1));
        monotone.le(bjn_norm(x, n), bjn_norm(x, n + 1));
        monotone.le(bjn_norm(x, n + 1), bj_norm(x));
      }

      SequenceVector ax{space, x.coords};
      for (double& c : ax.coords) c *= a;
      homogeneity.eq_rel(bj_norm(ax), std::fabs(a) * bj_norm(x));

      const std::size_t m = std::max(x.coords.size(), y.coords.size());
      SequenceVector sum{space, std::vector<double>(m, 0.0)};
      SequenceVector comb{space, std::vector<double>(m, 0.0)};
      for (std::size_t k = 0; k < m; ++k) {
        const double xk = k < x.coords.size() ? x.coords[k] : 0.0;
        const double yk = k < y.coords.size() ? y.coords[k] : 0.0;
        sum.coords[k] = xk + yk;
        comb.coords[k] = a * xk + b * yk;
      }
      triangle.le_rel(bj_norm(sum), bj_norm(x) + bj_norm(y));

      const auto t_comb = embed_T(comb);
      const auto tx = embed_T(x);
      const auto ty = embed_T(y);
      for (std::size_t k = 0; k < m; ++k) {
        const double xk = k < tx.size() ? tx[k] : 0.0;
        const double yk = k < ty.size() ? ty[k] : 0.0;
        linear.eq(t_comb[k], a * xk + b * yk);
      }

      const SequenceVector back = invert_T(embed_T(x), space);
      round_trip.holds(back.coords == x.coords && back.space == x.space);
    }
    for (const Check* c : {&isometry, &identical, &monotone, &homogeneity, &triangle, &linear,
                           &round_trip}) {
      out.push_back(c->result());
    }
  }
}

}  // namespace

std::vector<PropertyResult> run_verify(std::string_view suite, const VerifyOptions& options) {
  options.family.validate();
  const bool all = suite == "all";
  if (!all && suite != "bmo" && suite != "zachary" && suite != "embed") {
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<PropertyResult> out;
  if (all || suite == "bmo") bmo_suite(options, out);
  if (all || suite == "zachary") zachary_suite(options, out);
  if (all || suite == "embed") embed_suite(options, out);
  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.status != CheckStatus::Fail; });
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    default: return "INFO";
  }
}

}  // namespace zspace
