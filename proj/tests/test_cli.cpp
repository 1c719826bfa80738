#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "zspace/cli.hpp"
#include "zspace/verify.hpp"

using zspace::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("norm command") {
  Result r = call({"norm", "--fn", "1", "--norm", "zp", "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "norm,p,value,K,quad_level,truncation_bound\nzp,2,0,64,8,0\n");

  r = call({"--K", "1", "norm", "--fn", "step(x1)-step(x1-0.5)", "--norm", "zp", "--p", "1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(1) == "zp,1,0.1875,1,8,0.1875");

  r = call({"norm", "--builtin", "sign", "--norm", "bmo"});
  CHECK(r.code == 0);
  const auto row = fields(lines(r.out).at(1));
  CHECK(row.at(0) == "bmo");
  CHECK(std::fabs(std::stod(row.at(1)) - 1.0) < 1e-9);

  r = call({"norm", "--fn", "x1", "--p", "inf", "--space", "c0"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0) == "norm,p,value,K,quad_level,truncation_bound,space");
  CHECK(fields(lines(r.out).at(1)).at(1) == "inf");
  CHECK(fields(lines(r.out).at(1)).at(6) == "c0");
}

TEST_CASE("json field order") {
  Result r = call({"--format", "json", "--K", "2", "norm", "--fn", "x1", "--p", "inf", "--space", "l2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"p", "value", "K", "quad_level", "truncation_bound",
                                         "per_cube", "space"});
  CHECK(j["p"] == "inf");
  CHECK(j["per_cube"].size() == 2);
  CHECK(j["per_cube"][0]["k"] == 1);

  r = call({"--format", "json", "--K", "4", "norm", "--builtin", "sign", "--norm", "bmo"});
  REQUIRE(r.code == 0);
  const auto b = nlohmann::ordered_json::parse(r.out);
  CHECK(b.begin().key() == "value");
  CHECK(b["K_search"] == 4);
  CHECK(b["attaining_cube"]["center"].is_array());
}

TEST_CASE("converge command") {
  Result r = call({"converge", "--fn", "3", "--sweep", "K=1..4"});
  REQUIRE(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "param,value,norm,delta");
  CHECK(ls[1] == "K,1,0,");
  for (std::size_t i = 2; i < ls.size(); ++i) CHECK(fields(ls[i]).at(2) == "0");

  r = call({"converge", "--builtin", "sign", "--norm", "bmo", "--sweep", "quad-level=4..10"});
  REQUIRE(r.code == 0);
  ls = lines(r.out);
  REQUIRE(ls.size() == 8);
  for (std::size_t i = 2; i < ls.size(); ++i) CHECK(std::stod(fields(ls[i]).at(3)) < 1e-6);

  r = call({"converge", "--fn", "step(x1)-step(x1-0.375)", "--p", "2", "--sweep", "dim=1..6"});
  REQUIRE(r.code == 0);
  ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  const std::string first = fields(ls[1]).at(2);
  CHECK(first != "0");
  for (std::size_t i = 2; i < ls.size(); ++i) {
    CHECK(fields(ls[i]).at(2) == first);
    CHECK(fields(ls[i]).at(3) == "0");
  }
}

TEST_CASE("embed command") {
  Result r = call({"embed", "--space", "l2", "--coords", "3,-4", "--norm", "bj"});
  CHECK(r.code == 0);
  CHECK(r.out == "space,norm,value,round_trip\nl2,bj,5,ok\n");
  r = call({"embed", "--space", "l1", "--coords", "1,1", "--norm", "equiv"});
  CHECK(lines(r.out).at(1) == "l1,equiv,2,ok");
  r = call({"embed", "--space", "c0", "--coords", "0", "--norm", "bj"});
  CHECK(lines(r.out).at(1) == "c0,bj,0,ok");
  r = call({"embed", "--space", "l2", "--coords", "3,-4", "--norm", "bjn:1", "--norm", "native"});
  CHECK(lines(r.out).at(1) == "l2,bjn:1,3,ok");
  CHECK(lines(r.out).at(2) == "l2,native,5,ok");
}

TEST_CASE("verify command") {
  Result r = call({"--seed", "42", "verify", "--suite", "embed"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("embed,isometry[l2],PASS") != std::string::npos);
  CHECK(call({"--seed", "42", "verify", "--suite", "embed"}).out == r.out);

  // Regression fixture: the sandwich margin for seed 7.
  r = call({"--seed", "7", "verify", "--suite", "bmo"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bmo,sandwich_lower,PASS,100,1e-09,0.0078125\n") != std::string::npos);
  CHECK(r.out.find("bmo,sandwich_upper,PASS,") != std::string::npos);
}

TEST_CASE("verify status drives the exit code") {
  using zspace::CheckStatus;
  std::vector<zspace::PropertyResult> rs = {{"s", "a", CheckStatus::Pass, 1, 0, 0},
                                            {"s", "b", CheckStatus::Info, 1, 0, 5}};
  CHECK(zspace::all_passed(rs));
  rs.push_back({"s", "c", CheckStatus::Fail, 1, 0, -1});
  CHECK_FALSE(zspace::all_passed(rs));
}

TEST_CASE("exit codes") {
  Result r = call({"norm", "--fn", "x1*("});
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 4") != std::string::npos);
  CHECK(call({"norm", "--fn", "x1", "--p", "0.5"}).code == 2);
  CHECK(call({"norm", "--builtin", "nope"}).code == 2);
  CHECK(call({"norm"}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"converge", "--fn", "x1", "--sweep", "depth=1..3"}).code == 2);
  CHECK(call({"embed", "--space", "l2", "--coords", "1,,2"}).code == 2);
  CHECK(call({"--K", "0", "norm", "--fn", "x1"}).code == 2);
  CHECK(call({"--K", "100000", "norm", "--fn", "x1"}).code == 2);
  CHECK(call({"norm", "--fn", "log(x1)"}).code == 2);
  CHECK(call({"--quad-level", "30", "norm", "--fn", "x1"}).code == 3);
  CHECK(call({"--budget", "16", "norm", "--fn", "x1*x2"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args = {"--format", "json", "norm", "--builtin", "log_abs", "--p", "2"};
  const Result a = call(args);
  const Result b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
