#include "zspace/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>

#include "zspace/banach.hpp"
#include "zspace/bmo.hpp"
#include "zspace/errors.hpp"
#include "zspace/numfmt.hpp"
#include "zspace/verify.hpp"
#include "zspace/zachary.hpp"

namespace zspace::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Settings {
  std::string format = "csv";
  std::size_t K = 64;
  int quad_level = 8;
  double window = 1.0;
  std::uint64_t budget = QuadratureSpec::kDefaultBudget;
  std::uint64_t seed = 0;

  std::string fn;
  std::string builtin_name;
  std::string norm = "zp";
  std::string p = "2";
  std::string space;
  std::vector<std::string> shifts;
  std::string sweep;

  std::string suite = "all";

  std::string embed_space;
  std::string coords;
  std::vector<std::string> embed_norms{"bj"};
};

FamilyConfig family_of(const Settings& s) {
  FamilyConfig f;
  f.window = s.window;
  f.K = s.K;
  return f;
}

QuadratureSpec quad_of(const Settings& s) { return QuadratureSpec{s.quad_level, s.budget}; }

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInfP;
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidP("malformed p '" + text + "'");
  }
  if (!(p >= 1.0)) throw InvalidP("p must satisfy 1 <= p <= inf, got " + text);
  return p;
}

ordered_json p_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

TameFunction input_function(const Settings& s) {
  if (!s.fn.empty() && !s.builtin_name.empty()) throw DomainError("give --fn or --builtin, not both");
  if (!s.fn.empty()) return TameFunction::parse(s.fn);
  if (!s.builtin_name.empty()) return builtin(s.builtin_name);
  throw DomainError("one of --fn or --builtin is required");
}

SearchFamily search_of(const Settings& s, std::size_t k_search) {
  SearchFamily search{family_of(s), k_search, {}, {}};
  for (const auto& text : s.shifts) search.shifts.push_back(parse_coords(text));
  return search;
}

std::string join_csv(const std::vector<double>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += format_double(v[i]);
  }
  return out;
}

ordered_json z_report_json(const ZNormReport& r) {
  ordered_json j;
  j["p"] = p_json(r.p);
  j["value"] = r.value;
  j["K"] = r.K;
  j["quad_level"] = r.quad_level;
  j["truncation_bound"] = r.truncation_bound;
  ordered_json cubes = ordered_json::array();
  for (const auto& t : r.per_cube) {
    ordered_json c;
    c["k"] = t.k;
    c["f_ak"] = t.f_ak;
    c["deviation"] = t.deviation;
    cubes.push_back(std::move(c));
  }
  j["per_cube"] = std::move(cubes);
  if (r.space) j["space"] = r.space->name();
  return j;
}

ordered_json bmo_json(const BmoEstimate& e) {
  ordered_json j;
  j["value"] = e.value;
  j["K_search"] = e.k_search;
  j["quad_level"] = e.quad_level;
  j["attaining_cube"] = {{"dim", e.attaining_cube.dim()},
                         {"side", e.attaining_cube.side()},
                         {"center", e.attaining_cube.center()}};
  return j;
}

double norm_value(const TameFunction& f, const Settings& s, const FamilyConfig& family,
                  const QuadratureSpec& quad, std::size_t k_search) {
  if (s.norm == "zp") return z_norm(f, parse_p(s.p), family, quad).value;
  SearchFamily search = search_of(s, k_search);
  search.base = family;
  return bmo_norm(f, search, quad).value;
}

void check_norm_kind(const Settings& s) {
  if (s.norm != "zp" && s.norm != "bmo") throw DomainError("--norm must be zp or bmo");
}

int cmd_norm(const Settings& s, std::ostream& out) {
  check_norm_kind(s);
  const TameFunction f = input_function(s);
  const FamilyConfig family = family_of(s);
  const QuadratureSpec quad = quad_of(s);

  if (s.norm == "bmo") {
    const BmoEstimate e = bmo_norm(f, search_of(s, s.K), quad);
    if (s.format == "json") {
      out << bmo_json(e).dump(2) << '\n';
    } else {
      out << "norm,value,K_search,quad_level,cube_dim,cube_side,cube_center\n"
          << "bmo," << format_double(e.value) << ',' << e.k_search << ',' << e.quad_level << ','
          << e.attaining_cube.dim() << ',' << format_double(e.attaining_cube.side()) << ','
          << join_csv(e.attaining_cube.center(), ';') << '\n';
    }
    return kSuccess;
  }

  const double p = parse_p(s.p);
  const ZNormReport r = s.space.empty()
                            ? z_norm(f, p, family, quad)
                            : z_norm_banach(f, SpaceTag::parse(s.space), p, family, quad);
  if (s.format == "json") {
    out << z_report_json(r).dump(2) << '\n';
  } else {
    out << "norm,p,value,K,quad_level,truncation_bound" << (r.space ? ",space" : "") << '\n'
        << "zp," << format_double(r.p) << ',' << format_double(r.value) << ',' << r.K << ','
        << r.quad_level << ',' << format_double(r.truncation_bound);
    if (r.space) out << ',' << r.space->name();
    out << '\n';
  }
  return kSuccess;
}

struct Sweep {
  std::string name;
  long first;
  long last;
};

Sweep parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
    throw InvalidSweep("sweep must look like name=a..b, got '" + text + "'");
  }
  Sweep sw{text.substr(0, eq), 0, 0};
  if (sw.name != "quad-level" && sw.name != "K" && sw.name != "dim") {
    throw InvalidSweep("unknown sweep parameter '" + sw.name + "' (quad-level, K, dim)");
  }
  auto number = [&](std::string_view part) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
      throw InvalidSweep("malformed sweep bound in '" + text + "'");
    }
    return v;
  };
  const std::string_view view(text);
  sw.first = number(view.substr(eq + 1, dots - eq - 1));
  sw.last = number(view.substr(dots + 2));
  if (sw.first < 1 || sw.last < sw.first) throw InvalidSweep("sweep range must satisfy 1 <= a <= b");
  return sw;
}

int cmd_converge(const Settings& s, std::ostream& out) {
  check_norm_kind(s);
  const Sweep sw = parse_sweep(s.sweep);
  const TameFunction f = input_function(s);
  if (sw.name == "dim" && sw.first < f.order()) {
    throw InvalidSweep("dim sweep starts below the function order " + std::to_string(f.order()));
  }

  ordered_json rows = ordered_json::array();
  std::string csv = "param,value,norm,delta\n";
  std::optional<double> previous;
  for (long v = sw.first; v <= sw.last; ++v) {
    FamilyConfig family = family_of(s);
    QuadratureSpec quad = quad_of(s);
    TameFunction g = f;
    std::size_t k_search = s.K;
    if (sw.name == "quad-level") {
      quad.level = static_cast<int>(v);
    } else if (sw.name == "K") {
      family.K = static_cast<std::size_t>(v);
      k_search = family.K;
    } else {
      g = promote(f, static_cast<int>(v));
    }
    const double value = norm_value(g, s, family, quad, k_search);
    ordered_json row;
    row["param"] = sw.name;
    row["value"] = v;
    row["norm"] = value;
    csv += sw.name + ',' + std::to_string(v) + ',' + format_double(value) + ',';
    if (previous) {
      const double delta = std::fabs(value - *previous);
      row["delta"] = delta;
      csv += format_double(delta);
    } else {
      row["delta"] = nullptr;
    }
    csv += '\n';
    rows.push_back(std::move(row));
    previous = value;
  }
  if (s.format == "json") {
    out << rows.dump(2) << '\n';
  } else {
    out << csv;
  }
  return kSuccess;
}

int cmd_verify(const Settings& s, std::ostream& out) {
  VerifyOptions options;
  options.seed = s.seed;
  options.family = family_of(s);
  options.quad = quad_of(s);
  const auto results = run_verify(s.suite, options);
  if (s.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      ordered_json j;
      j["suite"] = r.suite;
      j["property"] = r.property;
      j["status"] = std::string(status_name(r.status));
      j["cases"] = r.cases;
      j["tolerance"] = r.tolerance;
      j["value"] = r.value;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "suite,property,status,cases,tolerance,value\n";
    for (const auto& r : results) {
      out << r.suite << ',' << r.property << ',' << status_name(r.status) << ',' << r.cases << ','
          << format_double(r.tolerance) << ',' << format_double(r.value) << '\n';
    }
  }
  return all_passed(results) ? kSuccess : kVerifyFailed;
}

int cmd_embed(const Settings& s, std::ostream& out) {
  const SequenceVector x = SequenceVector::parse(s.coords, s.embed_space);
  const SequenceVector back = invert_T(embed_T(x), x.space);
  const bool round_trip = back.coords == x.coords && back.space == x.space;

  std::vector<std::pair<std::string, double>> values;
  for (const auto& name : s.embed_norms) {
    if (name == "bj") {
      values.emplace_back(name, bj_norm(embed_T(x), x.space));
    } else if (name == "equiv") {
      values.emplace_back(name, equivalent_norm(x));
    } else if (name == "native") {
      values.emplace_back(name, native_norm(x));
    } else if (name.rfind("bjn:", 0) == 0) {
      std::size_t n = 0;
      const std::string_view digits = std::string_view(name).substr(4);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || n < 1) {
        throw ParseError("bjn needs a positive index, got '" + name + "'");
      }
      values.emplace_back(name, bjn_norm(x, n));
    } else {
      throw ParseError("unknown embed norm '" + name + "' (bj, bjn:N, equiv, native)");
    }
  }

  if (s.format == "json") {
    ordered_json j;
    j["space"] = x.space.name();
    j["coords"] = x.coords;
    ordered_json norms = ordered_json::array();
    for (const auto& [name, v] : values) norms.push_back({{"norm", name}, {"value", v}});
    j["norms"] = std::move(norms);
    j["round_trip"] = round_trip;
    out << j.dump(2) << '\n';
  } else {
    out << "space,norm,value,round_trip\n";
    for (const auto& [name, v] : values) {
      out << x.space.name() << ',' << name << ',' << format_double(v) << ','
          << (round_trip ? "ok" : "mismatch") << '\n';
    }
  }
  return kSuccess;
}

}  // namespace

TameFunction builtin(std::string_view name) {
  if (name == "sign") return TameFunction::parse("step(x1) - step(-x1)").with_label("sign");
  if (name == "log_abs") return TameFunction::parse("log(abs(x1))").with_label("log_abs");
  if (name == "const1") return TameFunction::parse("1").with_label("const1");
  throw DomainError("unknown builtin '" + std::string(name) + "' (sign, log_abs, const1)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Numerical BMO and Zachary seminorms on R_I^inf", "zspace"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--K", s.K, "Cube family truncation")->capture_default_str();
  app.add_option("--quad-level", s.quad_level, "Midpoints per axis = 2^level")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  app.add_option("--window", s.window, "Half-width W of the center lattice")
      ->capture_default_str();
  app.add_option("--budget", s.budget, "Max quadrature evaluations per cube")
      ->capture_default_str();
  app.add_option("--seed", s.seed, "Seed for randomized suites")->capture_default_str();

  auto add_function_flags = [&](CLI::App* cmd) {
    cmd->add_option("--fn", s.fn, "Function expression, e.g. 'step(x1)-step(x1-0.5)'");
    cmd->add_option("--builtin", s.builtin_name, "sign | log_abs | const1");
    cmd->add_option("--norm", s.norm, "zp | bmo")->capture_default_str();
    cmd->add_option("--p", s.p, "Exponent in [1, inf]; 'inf' for the sup")->capture_default_str();
    cmd->add_option("--shift", s.shifts, "Extra BMO search shift (comma list), repeatable");
  };

  CLI::App* norm = app.add_subcommand("norm", "Compute one seminorm");
  add_function_flags(norm);
  norm->add_option("--space", s.space, "Report Z^p over a sequence space (l1, l2, c0, ...)");

  CLI::App* converge = app.add_subcommand("converge", "Sweep a parameter, emit CSV");
  add_function_flags(converge);
  converge->add_option("--sweep", s.sweep, "quad-level=a..b | K=a..b | dim=a..b")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the property battery");
  verify->add_option("--suite", s.suite, "all | bmo | zachary | embed")
      ->check(CLI::IsMember({"all", "bmo", "zachary", "embed"}))
      ->capture_default_str();

  CLI::App* embed = app.add_subcommand("embed", "Sequence-space norms and the map T");
  embed->add_option("--space", s.embed_space, "l1 | l2 | l<p> | c0")->required();
  embed->add_option("--coords", s.coords, "Comma-separated coordinates")->required();
  embed->add_option("--norm", s.embed_norms, "bj | bjn:N | equiv | native, repeatable");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("zspace");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kDomainError;
  }

  try {
    if (*norm) return cmd_norm(s, out);
    if (*converge) return cmd_converge(s, out);
    if (*verify) return cmd_verify(s, out);
    return cmd_embed(s, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace zspace::cli
