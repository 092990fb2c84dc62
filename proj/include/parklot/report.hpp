#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace parklot {

enum class Verdict { Pass, Fail, Skip, Info };

std::string to_string(Verdict v);

/// One checked instance; `params` alone is enough to re-run it.
struct CaseRecord {
  nlohmann::ordered_json params;
  std::string expected;
  std::string observed;
  Verdict verdict = Verdict::Pass;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseRecord> cases;
  double elapsed_seconds = 0.0;

  /// Skipped and informational cases do not affect the verdict.
  bool passed() const;
  std::size_t count(Verdict v) const;
  void add(CaseRecord c) { cases.push_back(std::move(c)); }
};

enum class ReportFormat { Table, Json, Csv };

ReportFormat parse_report_format(const std::string& text);

nlohmann::ordered_json to_json(const SuiteReport& r, bool with_timing = true);
/// RFC 4180 rows: suite, params (compact JSON), expected, observed, verdict, note.
std::string to_csv(const SuiteReport& r);
/// Fixed-column text table followed by a summary line.
std::string to_table(const SuiteReport& r, bool with_timing = true);
std::string render(const SuiteReport& r, ReportFormat format, bool with_timing = true);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

}  // namespace parklot
