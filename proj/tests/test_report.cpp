#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "lbverify/errors.hpp"
#include "lbverify/report.hpp"

using namespace lb;

TEST_CASE("verdict vocabulary") {
  CHECK(to_string(Verdict::Pass) == "pass");
  CHECK(to_string(Verdict::Fail) == "fail");
  CHECK(to_string(Verdict::DiscrepancyLogged) == "discrepancy-logged");
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::DiscrepancyLogged}) CHECK(parse_verdict(to_string(v)) == v);
  CHECK_FALSE(parse_verdict("ok").has_value());
}

TEST_CASE("discrepancies never fail the report") {
  VerificationReport rep;
  rep.compare_claim("claim", "r=0", 1.0, 0.0, false);
  CHECK(rep.internal_ok());
  rep.check_at_most("internal", "r=0", 2.0, 1.0);
  CHECK_FALSE(rep.internal_ok());
  CHECK(rep.count(Verdict::Fail) == 1);
  CHECK(rep.count(Verdict::DiscrepancyLogged) == 1);
}

TEST_CASE("NaN never passes") {
  VerificationReport rep;
  rep.check_at_most("x", "r=0", std::numeric_limits<double>::quiet_NaN(), 1.0);
  rep.check_at_least("y", "r=0", std::numeric_limits<double>::quiet_NaN(), 1.0);
  CHECK(rep.count(Verdict::Fail) == 2);
}

TEST_CASE("empty csv is header only") {
  std::ostringstream os;
  emit_csv(VerificationReport{}, os);
  CHECK(os.str() == "check,location,value,tolerance,verdict\n");
}

TEST_CASE("csv round trip is bit exact") {
  VerificationReport rep;
  rep.add({"residual", on_grid(-2.0, 2.0, 4096), 0.1 + 0.2, 1e-9, Verdict::Pass});
  rep.add({"claim", at_r(-0.3), -std::nextafter(1.0 / 3.0, 1.0), 5e-4, Verdict::DiscrepancyLogged});
  std::ostringstream os;
  emit_csv(rep, os);
  std::istringstream is(os.str());
  const auto back = parse_csv(is);
  REQUIRE(back.rows().size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.rows()[i].check == rep.rows()[i].check);
    CHECK(back.rows()[i].location == rep.rows()[i].location);
    CHECK(back.rows()[i].value == rep.rows()[i].value);
    CHECK(back.rows()[i].tolerance == rep.rows()[i].tolerance);
    CHECK(back.rows()[i].verdict == rep.rows()[i].verdict);
  }
  CHECK(os.str().find('\r') == std::string::npos);
}

TEST_CASE("csv parse rejects malformed input") {
  std::istringstream bad_header("a,b,c\n");
  CHECK_THROWS_AS(parse_csv(bad_header), Error);
  std::istringstream bad_verdict("check,location,value,tolerance,verdict\nx,r=0,1,1,maybe\n");
  CHECK_THROWS_AS(parse_csv(bad_verdict), Error);
}

TEST_CASE("json schema") {
  VerificationReport rep;
  const ReportMeta meta{0.75, 1.0, std::sqrt(3.0 / 0.75), tool_version()};
  std::ostringstream os;
  emit_json(rep, meta, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j.contains("rows"));
  CHECK(j["rows"].is_array());
  CHECK(j["rows"].empty());
  CHECK(std::abs(j["meta"]["a"].get<double>() - std::sqrt(3.0 / 0.75)) < 1e-15);
  CHECK(j["meta"]["tool_version"] == tool_version());
}

TEST_CASE("json keys sorted and reserialization idempotent") {
  VerificationReport rep;
  rep.add({"r", "r=1", 0.1, 1e-9, Verdict::Pass});
  rep.add({"nan", "r=1", std::numeric_limits<double>::quiet_NaN(), 1e-9, Verdict::Fail});
  std::ostringstream os;
  emit_json(rep, ReportMeta{3.0, 0.5, 1.0, "0"}, os);
  const std::string text = os.str();
  CHECK(text.find("\"meta\"") < text.find("\"rows\""));
  CHECK(text.find("\"check\"") < text.find("\"location\""));
  CHECK(text.find("\"tolerance\"") < text.find("\"value\""));
  CHECK(text.find("\"value\"") < text.find("\"verdict\""));
  const auto j = nlohmann::json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
  CHECK(j["rows"][0]["value"].get<double>() == 0.1);
  CHECK(j["rows"][1]["value"].is_null());
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(std::stod(format_number(0.1)) == 0.1);
  CHECK(at_r(0.5) == "r=0.5");
  CHECK(on_grid(-2.0, 2.0, 4096) == "r=[-2;2];n=4096");
}
