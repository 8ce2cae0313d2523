#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace holoform {

struct CheckResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  bool pass = false;
};

enum class ReportFormat { json, csv, text };

using TolOverrides = std::map<std::string, double>;

struct SuiteConfig {
  std::string suite;
  uint64_t seed = 0;
  int samples = 100;
  TolOverrides tolerance_overrides;
  std::optional<std::string> output_path;
  ReportFormat format = ReportFormat::json;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;
  double wall_time_ms = 0;

  bool overall_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Serialize a report. JSON uses stable (alphabetical) key order and
/// scientific notation with 6 significant digits for residuals and
/// tolerances; it deliberately omits the wall time so that identical
/// configurations produce byte-identical output. CSV has the header
/// suite,check,max_residual,tolerance,pass. Text is a human-readable table.
std::string emit_report(const SuiteReport& r, ReportFormat format);

/// Parse a JSON report produced by emit_report (wall_time_ms comes back 0).
SuiteReport parse_report_json(const std::string& text);

}  // namespace holoform
