#include "holoform/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace holoform {

namespace {

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5e", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      r += '\\';
      r += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      r += buf;
    } else {
      r += c;
    }
  }
  return r;
}

}  // namespace

std::string emit_report(const SuiteReport& r, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::json: {
      out << "{\n  \"checks\": [";
      for (size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        out << (i ? "," : "") << "\n    {\"max_residual\": " << sci(c.max_residual)
            << ", \"name\": \"" << json_escape(c.name) << "\", \"pass\": "
            << (c.pass ? "true" : "false") << ", \"tolerance\": " << sci(c.tolerance) << "}";
      }
      if (!r.checks.empty()) out << "\n  ";
      out << "],\n";
      out << "  \"overall_pass\": " << (r.overall_pass() ? "true" : "false") << ",\n";
      out << "  \"samples\": " << r.samples << ",\n";
      out << "  \"seed\": " << r.seed << ",\n";
      out << "  \"suite\": \"" << json_escape(r.suite) << "\"\n}\n";
      break;
    }
    case ReportFormat::csv: {
      out << "suite,check,max_residual,tolerance,pass\n";
      for (const auto& c : r.checks)
        out << r.suite << "," << c.name << "," << sci(c.max_residual) << "," << sci(c.tolerance)
            << "," << (c.pass ? "true" : "false") << "\n";
      break;
    }
    case ReportFormat::text: {
      char line[160];
      out << "suite: " << r.suite << "  seed: " << r.seed << "  samples: " << r.samples << "\n";
      std::snprintf(line, sizeof(line), "%-38s %14s %12s %6s\n", "check", "max_residual",
                    "tolerance", "pass");
      out << line;
      for (const auto& c : r.checks) {
        std::snprintf(line, sizeof(line), "%-38s %14s %12s %6s\n", c.name.c_str(),
                      sci(c.max_residual).c_str(), sci(c.tolerance).c_str(),
                      c.pass ? "PASS" : "FAIL");
        out << line;
      }
      std::snprintf(line, sizeof(line), "overall: %s  (%.1f ms)\n",
                    r.overall_pass() ? "PASS" : "FAIL", r.wall_time_ms);
      out << line;
      break;
    }
  }
  return out.str();
}

SuiteReport parse_report_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  r.samples = j.at("samples").get<int>();
  for (const auto& c : j.at("checks")) {
    CheckResult cr;
    cr.name = c.at("name").get<std::string>();
    cr.max_residual = c.at("max_residual").get<double>();
    cr.tolerance = c.at("tolerance").get<double>();
    cr.pass = c.at("pass").get<bool>();
    r.checks.push_back(cr);
  }
  return r;
}

}  // namespace holoform
