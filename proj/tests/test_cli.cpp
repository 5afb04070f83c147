#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lbverify/cli.hpp"
#include "lbverify/report.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = lb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

TEST_CASE("verify on defaults") {
  const auto r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("check,location,value,tolerance,verdict\n", 0) == 0);
  for (const char* check : {"f_equation_residual", "u_equation_residual", "field_equation_residual", "noether_constancy"})
    CHECK(r.out.find(std::string("\n") + check + ",") != std::string::npos);
  CHECK(r.out.find(",fail\n") == std::string::npos);
  CHECK(r.out.find(",discrepancy-logged\n") != std::string::npos);
}

TEST_CASE("documented exit codes") {
  CHECK(run({"verify", "--lambda", "3", "--xi", "1"}).code == 0);
  CHECK(run({"verify", "--lambda", "-1", "--xi", "1"}).code == 2);
  CHECK(run({"congruence", "--lambda", "3", "--xi", "0", "--e-tilde", "0.5"}).code == 2);
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--samples", "1"}).code == 2);
  CHECK(run({"verify", "--r-min", "1", "--r-max", "-1"}).code == 2);
  CHECK(run({"verify", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--no-such-flag"}).code == 2);
  CHECK(run({"congruence", "--b", "0.7"}).code == 2);
  CHECK(run({"sweep", "--xi", "0:1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("unwritable output is exit 1") {
  const auto r = run({"stability", "--out", "/nonexistent-dir/report.csv"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = std::filesystem::temp_directory_path() / "lbverify_cli_test.csv";
  CHECK(run({"energy", "--samples", "257", "--out", path.string()}).code == 0);
  std::ifstream in(path, std::ios::binary);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(file == run({"energy", "--samples", "257"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("every subcommand is deterministic") {
  for (const char* sub : {"verify", "stability", "energy", "congruence", "tortoise"}) {
    const auto a = run({sub, "--samples", "513", "--format", "json"});
    const auto b = run({sub, "--samples", "513", "--format", "json"});
    CAPTURE(sub);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("sweep ordering does not depend on threads") {
  const std::vector<std::string> args{"sweep", "--lambda", "0.75:12:3", "--xi", "0:2:3", "--e-tilde", "1:3:2", "--samples", "257"};
  setenv("LBVERIFY_THREADS", "1", 1);
  const auto one = run(args);
  setenv("LBVERIFY_THREADS", "8", 1);
  const auto many = run(args);
  unsetenv("LBVERIFY_THREADS");
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
  std::istringstream is(one.out);
  const auto rep = lb::parse_csv(is);
  CHECK(rep.rows().front().location == "lambda=0.75;xi=0;e=1");
  CHECK(rep.rows().back().location == "lambda=12;xi=2;e=3");
}

TEST_CASE("json meta") {
  const auto r = run({"stability", "--lambda", "0.75", "--xi", "0.5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["meta"]["lambda"].get<double>() == 0.75);
  CHECK(j["meta"]["xi"].get<double>() == 0.5);
  CHECK(std::abs(j["meta"]["a"].get<double>() - 2.0) < 1e-15);
  CHECK(j["rows"].size() > 0);
}

TEST_CASE("csv output parses back") {
  const auto r = run({"tortoise", "--samples", "257"});
  std::istringstream is(r.out);
  const auto rep = lb::parse_csv(is);
  CHECK(rep.internal_ok());
  std::ostringstream os;
  lb::emit_csv(rep, os);
  CHECK(os.str() == r.out);
}

TEST_CASE("exit-code contract over random configurations") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lam(-2.0, 15.0), xi(-3.0, 3.0), e(-3.0, 3.0);
  const char* subs[] = {"verify", "stability", "energy", "congruence", "tortoise"};
  for (int i = 0; i < 40; ++i) {
    const std::string sub = subs[i % 5];
    const double l = lam(rng), x = xi(rng), et = e(rng);
    std::vector<std::string> args{sub, "--lambda", fmt(l), "--xi", fmt(x), "--samples", "257"};
    if (sub == "congruence") {
      args.push_back("--e-tilde");
      args.push_back(fmt(et));
    }
    int expected = 0;
    if (!(l > 0.0)) expected = 2;
    if (sub == "congruence" && std::abs(et) < 1.0) expected = 2;
    const auto r = run(args);
    CAPTURE(sub);
    CAPTURE(l);
    CAPTURE(x);
    CAPTURE(et);
    CAPTURE(r.err);
    CHECK(r.code == expected);
  }
}
