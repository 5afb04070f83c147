#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lb {

/// `DiscrepancyLogged` is reserved for comparisons of a printed claim against an oracle;
/// internal-consistency checks are only ever Pass or Fail.
enum class Verdict { Pass, Fail, DiscrepancyLogged };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view token);

struct ReportRow {
  std::string check;
  std::string location;
  double value = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Pass;
};

struct ReportMeta {
  double lambda = 0.0;
  double xi = 0.0;
  double a = 0.0;
  std::string tool_version;
};

class VerificationReport {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }
  void append(const VerificationReport& other);

  /// Internal check: passes when value <= tolerance.
  void check_at_most(std::string check, std::string location, double value, double tolerance);
  /// Internal check: passes when value >= threshold.
  void check_at_least(std::string check, std::string location, double value, double threshold);
  /// Claim comparison: Pass when `agrees`, DiscrepancyLogged otherwise.
  void compare_claim(std::string check, std::string location, double value, double tolerance,
                     bool agrees);

  const std::vector<ReportRow>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }
  /// True when no row is Fail. Discrepancy rows never affect this.
  bool internal_ok() const;
  std::size_t count(Verdict v) const;
  const ReportRow* find(std::string_view check) const;

 private:
  std::vector<ReportRow> rows_;
};

std::string tool_version();

/// Formats with 17 significant digits (round-trip exact for doubles).
std::string format_number(double v);

/// "r=<v>" location token.
std::string at_r(double r);
/// "r=[lo;hi];n=<n>" grid-summary location token.
std::string on_grid(double lo, double hi, std::size_t n);

/// Header `check,location,value,tolerance,verdict`, LF line endings.
void emit_csv(const VerificationReport& report, std::ostream& out);
/// {"meta": {...}, "rows": [...]}, keys sorted.
void emit_json(const VerificationReport& report, const ReportMeta& meta, std::ostream& out);

/// Parses what emit_csv wrote; throws lb::Error on malformed input.
VerificationReport parse_csv(std::istream& in);

}  // namespace lb
