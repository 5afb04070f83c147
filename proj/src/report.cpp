#include "lbverify/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lbverify/errors.hpp"

#ifndef LBVERIFY_VERSION
#define LBVERIFY_VERSION "0.0.0"
#endif

namespace lb {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::DiscrepancyLogged:
      return "discrepancy-logged";
  }
  return "fail";
}

std::optional<Verdict> parse_verdict(std::string_view token) {
  if (token == "pass") return Verdict::Pass;
  if (token == "fail") return Verdict::Fail;
  if (token == "discrepancy-logged") return Verdict::DiscrepancyLogged;
  return std::nullopt;
}

void VerificationReport::append(const VerificationReport& other) {
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

void VerificationReport::check_at_most(std::string check, std::string location, double value,
                                       double tolerance) {
  const bool ok = std::isfinite(value) && value <= tolerance;
  add({std::move(check), std::move(location), value, tolerance, ok ? Verdict::Pass : Verdict::Fail});
}

void VerificationReport::check_at_least(std::string check, std::string location, double value,
                                        double threshold) {
  const bool ok = std::isfinite(value) && value >= threshold;
  add({std::move(check), std::move(location), value, threshold, ok ? Verdict::Pass : Verdict::Fail});
}

void VerificationReport::compare_claim(std::string check, std::string location, double value,
                                       double tolerance, bool agrees) {
  add({std::move(check), std::move(location), value, tolerance,
       agrees ? Verdict::Pass : Verdict::DiscrepancyLogged});
}

bool VerificationReport::internal_ok() const { return count(Verdict::Fail) == 0; }

std::size_t VerificationReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.verdict == v ? 1 : 0;
  return n;
}

const ReportRow* VerificationReport::find(std::string_view check) const {
  for (const auto& row : rows_) {
    if (row.check == check) return &row;
  }
  return nullptr;
}

std::string tool_version() { return LBVERIFY_VERSION; }

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0 so the output does not depend on rounding sign
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string at_r(double r) { return "r=" + format_number(r); }

std::string on_grid(double lo, double hi, std::size_t n) {
  return "r=[" + format_number(lo) + ";" + format_number(hi) + "];n=" + std::to_string(n);
}

void emit_csv(const VerificationReport& report, std::ostream& out) {
  out << "check,location,value,tolerance,verdict\n";
  for (const auto& row : report.rows()) {
    out << row.check << ',' << row.location << ',' << format_number(row.value) << ','
        << format_number(row.tolerance) << ',' << to_string(row.verdict) << '\n';
  }
}

namespace {

nlohmann::json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v == 0.0 ? 0.0 : v;
}

double parse_double(const std::string& s) {
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  if (s == "nan" || s == "-nan") return NAN;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw Error("csv: bad number '" + s + "'");
  return v;
}

}  // namespace

void emit_json(const VerificationReport& report, const ReportMeta& meta, std::ostream& out) {
  nlohmann::json doc;
  doc["meta"] = {{"lambda", number_or_null(meta.lambda)},
                 {"xi", number_or_null(meta.xi)},
                 {"a", number_or_null(meta.a)},
                 {"tool_version", meta.tool_version}};
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows()) {
    doc["rows"].push_back({{"check", row.check},
                           {"location", row.location},
                           {"value", number_or_null(row.value)},
                           {"tolerance", number_or_null(row.tolerance)},
                           {"verdict", std::string(to_string(row.verdict))}});
  }
  out << doc.dump(2) << '\n';
}

VerificationReport parse_csv(std::istream& in) {
  VerificationReport report;
  std::string line;
  if (!std::getline(in, line) || line != "check,location,value,tolerance,verdict") {
    throw Error("csv: missing or malformed header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 5) throw Error("csv: expected 5 fields in '" + line + "'");
    const auto verdict = parse_verdict(fields[4]);
    if (!verdict) throw Error("csv: unknown verdict '" + fields[4] + "'");
    report.add({fields[0], fields[1], parse_double(fields[2]), parse_double(fields[3]), *verdict});
  }
  return report;
}

}  // namespace lb
