#pragma once

#include <functional>
#include <string>
#include <vector>

#include "holoform/report.hpp"

namespace holoform {

/// One named residual battery: draws `samples` seeded samples and returns
/// the worst residual observed.
struct CheckSpec {
  std::string name;
  double default_tolerance;
  std::function<double(uint64_t seed, int samples)> residual;
};

/// Suites in fixed order: lie-identities, psl-curvature, g-space, quadrics,
/// rotpi-cover, symmetric-scaling, symmetric-curvature.
const std::vector<std::pair<std::string, std::vector<CheckSpec>>>& suite_registry();

std::vector<std::string> suite_names();  // includes "all"

/// Run one suite (or "all"). The per-check sub-seed is derived from the
/// config seed and the check name only, so results are independent of
/// execution order.
std::vector<CheckResult> run_battery(const std::string& suite, uint64_t seed, int samples,
                                     const TolOverrides& overrides = {});

/// Run a single named check with its default tolerance.
CheckResult run_check(const std::string& name, uint64_t seed, int samples);

SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace holoform
