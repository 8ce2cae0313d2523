// Seeded property-suite runner. `holoform check <suite> ...` runs the named
// battery and emits a report; exit status is 0 iff every check passes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holoform/report.hpp"
#include "holoform/suites.hpp"

namespace {

bool parse_tol_override(const std::string& item, std::string& name, double& value) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    name = item.substr(0, eq);
    try {
        size_t used = 0;
        value = std::stod(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) return false;
    } catch (const std::exception&) {
        return false;
    }
    return value > 0.0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"holoform: numerical property checks for holomorphic Riemannian models"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "run a property suite");

    std::string suite;
    std::string suites_help = "suite name (";
    const auto names = holoform::suite_names();
    for (size_t i = 0; i < names.size(); ++i)
        suites_help += names[i] + (i + 1 < names.size() ? ", " : ")");
    check->add_option("suite", suite, suites_help)->required();

    // HOLOFORM_SEED provides the default seed; an explicit --seed wins.
    std::uint64_t seed = 0;
    if (const char* env = std::getenv("HOLOFORM_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "invalid HOLOFORM_SEED: " << env << "\n";
            return 2;
        }
    }
    check->add_option("--seed", seed, "RNG seed");

    int samples = 100;
    check->add_option("--samples", samples, "samples per check")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> tol_items;
    check->add_option("--tol", tol_items, "tolerance override, name=value (repeatable)");

    std::string out_path;
    check->add_option("--out", out_path, "write report to file instead of stdout");

    std::string format = "json";
    check->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    CLI11_PARSE(app, argc, argv);

    bool known = suite == "all";
    for (const auto& s : holoform::suite_names()) known = known || s == suite;
    if (!known) {
        std::cerr << "unknown suite: " << suite << "\n" << check->help();
        return 2;
    }

    holoform::SuiteConfig cfg;
    cfg.suite = suite;
    cfg.seed = seed;
    cfg.samples = samples;
    for (const auto& item : tol_items) {
        std::string name;
        double value = 0.0;
        if (!parse_tol_override(item, name, value)) {
            std::cerr << "bad --tol (want name=value with value > 0): " << item << "\n";
            return 2;
        }
        cfg.tolerance_overrides[name] = value;
    }

    holoform::SuiteReport report;
    try {
        report = holoform::run_suite(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    holoform::ReportFormat fmt = holoform::ReportFormat::json;
    if (format == "csv") fmt = holoform::ReportFormat::csv;
    if (format == "text") fmt = holoform::ReportFormat::text;
    const std::string bytes = holoform::emit_report(report, fmt);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output path: " << out_path << "\n";
            return 2;
        }
        out << bytes;
        if (!out) {
            std::cerr << "error: write failed: " << out_path << "\n";
            return 2;
        }
    } else {
        std::cout << bytes;
    }

    return report.overall_pass() ? 0 : 1;
}
