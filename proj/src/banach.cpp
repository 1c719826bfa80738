#include "zspace/banach.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "zspace/errors.hpp"

namespace zspace {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

SpaceTag SpaceTag::lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("l^p needs 1 <= p < inf");
  return SpaceTag(Kind::Lp, p);
}

SpaceTag SpaceTag::parse(std::string_view text) {
  if (text == "c0") return c0();
  if (text.size() >= 2 && text[0] == 'l') return lp(parse_double(text.substr(1), "space exponent"));
  throw ParseError("unknown space '" + std::string(text) + "' (expected c0 or l<p>)");
}

std::string SpaceTag::name() const {
  if (kind_ == Kind::C0) return "c0";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), p_);
  return "l" + std::string(buf.data(), end);
}

std::vector<double> parse_coords(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start), "coordinate"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

SequenceVector SequenceVector::parse(std::string_view coords, std::string_view space) {
  return SequenceVector{SpaceTag::parse(space), parse_coords(coords)};
}

double partial_sum_norm(std::span<const double> coords, const SpaceTag& space, std::size_t n) {
  if (n < 1) throw DomainError("partial sums start at n = 1");
  const std::size_t m = std::min(n, coords.size());
  if (space.kind() == SpaceTag::Kind::C0) {
    double r = 0.0;
    for (std::size_t k = 0; k < m; ++k) r = std::max(r, std::fabs(coords[k]));
    return r;
  }
  const double p = space.p();
  double sum = 0.0;
  if (p == 1.0) {
    for (std::size_t k = 0; k < m; ++k) sum += std::fabs(coords[k]);
    return sum;
  }
  if (p == 2.0) {
    for (std::size_t k = 0; k < m; ++k) sum += coords[k] * coords[k];
    return std::sqrt(sum);
  }
  for (std::size_t k = 0; k < m; ++k) sum += std::pow(std::fabs(coords[k]), p);
  return std::pow(sum, 1.0 / p);
}

double partial_sum_norm(const SequenceVector& x, std::size_t n) {
  return partial_sum_norm(x.coords, x.space, n);
}

double bjn_norm(std::span<const double> coords, const SpaceTag& space, std::size_t n) {
  double r = 0.0;
  for (std::size_t k = 1; k <= n; ++k) r = std::max(r, partial_sum_norm(coords, space, k));
  return r;
}

double bjn_norm(const SequenceVector& x, std::size_t n) { return bjn_norm(x.coords, x.space, n); }

double bj_norm(std::span<const double> coords, const SpaceTag& space) {
  return bjn_norm(coords, space, std::max<std::size_t>(coords.size(), 1));
}

double bj_norm(const SequenceVector& x) { return bj_norm(x.coords, x.space); }

double equivalent_norm(const SequenceVector& x) {
  double sup = 0.0;
  for (std::size_t n = 1; n <= x.coords.size(); ++n) {
    const double pn = partial_sum_norm(x, n);
    if (pn > sup) sup = pn;
  }
  return sup;
}

double native_norm(const SequenceVector& x) {
  if (x.coords.empty()) return 0.0;
  return partial_sum_norm(x, x.coords.size());
}

std::vector<double> embed_T(const SequenceVector& x) { return x.coords; }

SequenceVector invert_T(std::span<const double> coords, const SpaceTag& space) {
  return SequenceVector{space, std::vector<double>(coords.begin(), coords.end())};
}

}  // namespace zspace
