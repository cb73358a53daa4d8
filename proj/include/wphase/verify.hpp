#pragma once

// Named numerical checks of the phase-operator identities, grouped into
// suites. Each check returns its largest observed defect against a
// tolerance; report-only checks record findings without affecting the
// overall verdict.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wphase {

struct CheckResult {
  std::string name;
  bool pass = false;
  double max_defect = 0.0;
  double tolerance = 0.0;
  double seconds = 0.0;
  bool report_only = false;
  /// "max": pass iff max_defect <= tolerance; "min": pass iff max_defect > tolerance.
  std::string direction = "max";
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct VerifyConfig {
  std::string suite = "all";
  /// Replaces the per-check default dimensions when set.
  std::optional<int> dim;
  std::map<std::string, double> tolerance_overrides;
  std::uint64_t seed = 0x5eed'2024ULL;
  bool record_timing = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Every asserted (non-report-only) check passed.
  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Check names in a suite, in execution order. Throws DomainError for an
/// unknown suite.
std::vector<std::string> checks_in_suite(const std::string& suite);

/// Default tolerance per check name.
const std::map<std::string, double>& default_tolerances();

/// Throws DomainError on an unknown suite or tolerance name and on a dim
/// outside [1, 64].
VerifyReport run_verify(const VerifyConfig& config);

/// Runs one named check.
CheckResult run_check(const std::string& name, const VerifyConfig& config);

}  // namespace wphase
