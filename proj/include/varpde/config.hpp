#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varpde/advection.hpp"
#include "varpde/initial_conditions.hpp"
#include "varpde/scheme_kind.hpp"

namespace varpde {

enum class Command { Advect, Vorticity, Dispersion };

std::string_view to_string(Command command) noexcept;

/// Everything needed to reproduce one run. IC parameters hold only the
/// values given explicitly; the rest come from default_ic_params.
struct RunConfig {
  Command command = Command::Advect;
  AdvectionKind scheme = AdvectionKind::Veselov;
  std::optional<InitialCondition> ic;
  std::size_t nx = 255;
  std::size_t ny = 1;
  std::size_t nt = 4000;
  double ht = 2.5e-3;
  double c = 1.0;
  double nu = 0.75;
  double picard_tol = 1e-12;
  std::optional<std::size_t> snap_every;
  std::string out = "out";
  std::optional<Bootstrap> bootstrap;
  IcParams ic_params;

  bool operator==(const RunConfig&) const = default;
};

/// Reference settings per command.
RunConfig default_config(Command command);

/// args[0] is the command, the rest are flags. A --config file is read
/// first, so flags given on the command line override it. Throws Error
/// with kind Parse naming the offending flag or file line.
RunConfig parse_config(const std::vector<std::string>& args);

/// Command plus flags; parse_config(render(cfg)) == cfg.
std::vector<std::string> render(const RunConfig& cfg);

/// key = value lines accepted by --config (command excluded).
std::string render_file(const RunConfig& cfg);

/// Cross-field checks; throws Error(Parse).
void validate(const RunConfig& cfg);

/// Explicit interval, else about ten snapshots per run.
std::size_t snapshot_interval(const RunConfig& cfg) noexcept;

/// IC kind actually used: the explicit one, else gaussian for advect and
/// lamb-dipole for vorticity. Dispersion without --ic is theory only.
std::optional<InitialCondition> effective_ic(const RunConfig& cfg);

/// default_ic_params(ic) overlaid with the explicit values.
IcParams effective_ic_params(const RunConfig& cfg);

std::string usage();

}  // namespace varpde
