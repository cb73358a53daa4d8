#pragma once

// wigner_phase command line: opmat, dist and verify subcommands.
// Exit codes: 0 success, 1 failed check, 2 bad flags, 3 numeric range.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wphase {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  int dim = 64;
  int n_grid = 512;
  std::map<std::string, double> tolerances;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::Csv;
};

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBadFlags = 2, kExitNumericRange = 3 };

/// args excludes the program name. Normal output goes to out unless --out
/// names a file; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wphase
