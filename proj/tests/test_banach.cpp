#include <doctest.h>

#include <cmath>
#include <vector>

#include "zspace/banach.hpp"
#include "zspace/corpus.hpp"
#include "zspace/errors.hpp"

using namespace zspace;

namespace {

SequenceVector vec(std::vector<double> c, const char* space) {
  return SequenceVector{SpaceTag::parse(space), std::move(c)};
}

}  // namespace

TEST_CASE("space tags") {
  CHECK(SpaceTag::parse("l2") == SpaceTag::lp(2));
  CHECK(SpaceTag::parse("l2.5").p() == 2.5);
  CHECK(SpaceTag::parse("c0").kind() == SpaceTag::Kind::C0);
  CHECK(SpaceTag::lp(4).name() == "l4");
  CHECK(SpaceTag::parse("l2.5").name() == "l2.5");
  CHECK_THROWS_AS(SpaceTag::parse("l0.5"), DomainError);
  CHECK_THROWS_AS(SpaceTag::parse("linf"), DomainError);
  CHECK_THROWS_AS(SpaceTag::parse("h1"), ParseError);
  CHECK_THROWS_AS(SpaceTag::parse(""), ParseError);
}

TEST_CASE("coordinate lists") {
  CHECK(parse_coords("3,-4") == std::vector<double>{3, -4});
  CHECK(parse_coords(" 1 , 2.5 ") == std::vector<double>{1, 2.5});
  CHECK_THROWS_AS(parse_coords("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_coords("1,x"), ParseError);
  CHECK_THROWS_AS(parse_coords(""), ParseError);
  CHECK_THROWS_AS(parse_coords("nan"), ParseError);
}

TEST_CASE("partial sums") {
  CHECK(partial_sum_norm(vec({1}, "l2"), 5) == 1.0);
  CHECK(partial_sum_norm(vec({1, 1}, "l1"), 2) == 2.0);
  CHECK(partial_sum_norm(vec({3, -4}, "l2"), 2) == 5.0);
  CHECK(partial_sum_norm(vec({3, -4}, "l2"), 1) == 3.0);
  CHECK(partial_sum_norm(vec({1, -2, 0.5}, "c0"), 3) == 2.0);
  CHECK(partial_sum_norm(vec({1, 1}, "l4"), 2) == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK_THROWS_AS(partial_sum_norm(vec({1}, "l2"), 0), DomainError);
}

TEST_CASE("bj norms") {
  CHECK(bjn_norm(vec({1}, "l2"), 3) == 1.0);
  CHECK(bjn_norm(vec({3, -4}, "l2"), 2) == 5.0);
  for (const char* s : {"l1", "l2", "c0"}) CHECK(bjn_norm(vec({0, 0}, s), 2) == 0.0);
  CHECK(bj_norm(vec({1, 1, 0}, "l1")) == 2.0);
  CHECK(bj_norm(vec({1, -2}, "c0")) == 2.0);
  CHECK(bj_norm(vec({3, -4, 0}, "l2")) == 5.0);
  CHECK(bj_norm(vec({}, "l2")) == 0.0);
}

TEST_CASE("equivalent and native norms") {
  CHECK(equivalent_norm(vec({0, 0, 0, 0, 0, 0, 1}, "l4")) == 1.0);
  CHECK(equivalent_norm(vec({1, 1, 1}, "l2")) == std::sqrt(3.0));
  CHECK(native_norm(vec({1, 1, 1}, "l2")) == std::sqrt(3.0));
  CHECK(native_norm(vec({-7, 2}, "c0")) == 7.0);
}

TEST_CASE("embedding") {
  const SequenceVector x = vec({3, -4}, "l2");
  const std::vector<double> t = embed_T(x);
  CHECK(t == x.coords);
  const SequenceVector back = invert_T(t, x.space);
  CHECK(back.coords == x.coords);
  CHECK(back.space == x.space);
  CHECK(embed_T(vec({}, "l1")).empty());
  CHECK(embed_T(vec({0, 0}, "l1")) == std::vector<double>{0, 0});
}

TEST_CASE("isometry on seeded vectors") {
  FixtureRng rng(99);
  for (const char* s : {"l1", "l2", "l4", "c0", "l2.5"}) {
    const SpaceTag space = SpaceTag::parse(s);
    for (int i = 0; i < 100; ++i) {
      const SequenceVector x = random_sequence(rng, space);
      // Oracle: the norm written out directly.
      double direct = 0;
      for (double c : x.coords) {
        direct = space.kind() == SpaceTag::Kind::C0 ? std::max(direct, std::fabs(c))
                                                    : direct + std::pow(std::fabs(c), space.p());
      }
      if (space.kind() == SpaceTag::Kind::Lp) direct = std::pow(direct, 1 / space.p());
      const double bj = bj_norm(embed_T(x), space);
      CHECK(bj == equivalent_norm(x));
      CHECK(bj == doctest::Approx(direct).epsilon(1e-12));
      CHECK(native_norm(x) == doctest::Approx(direct).epsilon(1e-12));
      double prev = 0;
      for (std::size_t n = 1; n <= x.coords.size(); ++n) {
        const double pn = partial_sum_norm(x, n);
        CHECK(pn >= prev);
        prev = pn;
      }
    }
  }
}
