#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "varpde/config.hpp"
#include "varpde/errors.hpp"

namespace varpde {

struct RunSummary {
  /// Files written, relative to the output directory.
  std::vector<std::string> files;
  /// Relative drift per invariant, max |v - v0| / max(1, |v0|).
  std::map<std::string, double> drift;
};

/// Runs one experiment, writing invariants.csv, snapshots (or
/// dispersion.csv) and run.json into cfg.out. Throws Error.
RunSummary run_experiment(const RunConfig& cfg, std::ostream& log);

/// 0 success, 2 parse/parameter error, 3 solver failure, 4 invalid
/// grid or field, 1 anything else (I/O).
int exit_code(ErrorKind kind) noexcept;

/// Full command-line behaviour; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace varpde
