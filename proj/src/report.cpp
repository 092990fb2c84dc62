#include "parklot/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "parklot/error.hpp"

namespace parklot {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skip:
      return "skip";
    case Verdict::Info:
      return "info";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(Verdict::Fail) == 0; }

std::size_t SuiteReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [v](const CaseRecord& c) { return c.verdict == v; }));
}

ReportFormat parse_report_format(const std::string& text) {
  if (text == "table") return ReportFormat::Table;
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  throw InvalidArgument("unknown format '" + text + "' (expected json|csv|table)");
}

nlohmann::ordered_json to_json(const SuiteReport& r, bool with_timing) {
  nlohmann::ordered_json out;
  out["suite"] = r.suite;
  out["passed"] = r.passed();
  out["counts"] = {{"pass", r.count(Verdict::Pass)},
                   {"fail", r.count(Verdict::Fail)},
                   {"skip", r.count(Verdict::Skip)},
                   {"info", r.count(Verdict::Info)}};
  if (with_timing) out["elapsed_seconds"] = r.elapsed_seconds;
  auto& cases = out["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json row;
    row["params"] = c.params;
    row["expected"] = c.expected;
    row["observed"] = c.observed;
    row["verdict"] = to_string(c.verdict);
    if (!c.note.empty()) row["note"] = c.note;
    cases.push_back(std::move(row));
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string to_csv(const SuiteReport& r) {
  std::ostringstream out;
  out << "suite,params,expected,observed,verdict,note\r\n";
  for (const auto& c : r.cases)
    out << csv_field(r.suite) << ',' << csv_field(c.params.dump()) << ',' << csv_field(c.expected) << ','
        << csv_field(c.observed) << ',' << to_string(c.verdict) << ',' << csv_field(c.note) << "\r\n";
  return out.str();
}

namespace {

std::string params_text(const nlohmann::ordered_json& p) {
  std::string s;
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (!s.empty()) s += ' ';
    s += it.key() + '=' + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return s;
}

}  // namespace

std::string to_table(const SuiteReport& r, bool with_timing) {
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"params", "expected", "observed", "verdict", "note"});
  for (const auto& c : r.cases) rows.push_back({params_text(c.params), c.expected, c.observed, to_string(c.verdict), c.note});
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows)
    for (std::size_t k = 0; k < 5; ++k) width[k] = std::max(width[k], row[k].size());

  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < 5; ++k) {
      std::string cell = row[k];
      if (k + 1 < 5) cell.resize(width[k], ' ');
      line += (k ? "  " : "") + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.count(Verdict::Pass) << " pass, "
      << r.count(Verdict::Fail) << " fail, " << r.count(Verdict::Skip) << " skip, " << r.count(Verdict::Info)
      << " info)";
  if (with_timing) out << " in " << std::fixed << std::setprecision(2) << r.elapsed_seconds << "s";
  out << '\n';
  return out.str();
}

std::string render(const SuiteReport& r, ReportFormat format, bool with_timing) {
  switch (format) {
    case ReportFormat::Json:
      return to_json(r, with_timing).dump(2) + '\n';
    case ReportFormat::Csv:
      return to_csv(r);
    case ReportFormat::Table:
      break;
  }
  return to_table(r, with_timing);
}

}  // namespace parklot
