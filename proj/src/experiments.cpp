#include "varpde/experiments.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "varpde/advection.hpp"
#include "varpde/dispersion.hpp"
#include "varpde/initial_conditions.hpp"
#include "varpde/io.hpp"
#include "varpde/vorticity.hpp"

namespace varpde {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string level_name(const char* prefix, std::size_t level) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%06zu.txt", prefix, level);
  return buf;
}

std::map<std::string, double> drift_1d(const InvariantSeries1D& s) {
  return {{"mass", relative_drift(column(s, &InvariantRecord1D::mass))},
          {"l2", relative_drift(column(s, &InvariantRecord1D::l2))},
          {"momentum", relative_drift(column(s, &InvariantRecord1D::momentum))},
          {"energy", relative_drift(column(s, &InvariantRecord1D::energy))}};
}

std::map<std::string, double> drift_2d(const InvariantSeries2D& s) {
  return {{"circulation", relative_drift(column(s, &InvariantRecord2D::circulation))},
          {"enstrophy", relative_drift(column(s, &InvariantRecord2D::enstrophy))},
          {"energy", relative_drift(column(s, &InvariantRecord2D::energy))}};
}

class Output {
 public:
  explicit Output(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create '" + dir + "': " + ec.message());
  }
  std::string path(const std::string& name) {
    files_.push_back(name);
    return (dir_ / name).string();
  }
  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

json base_metadata(const RunConfig& cfg) {
  json meta;
  meta["command"] = std::string(to_string(cfg.command));
  meta["args"] = render(cfg);
  if (const auto ic = effective_ic(cfg)) meta["ic"] = to_string(*ic);
  return meta;
}

RunSummary run_advect(const RunConfig& cfg, std::ostream& log, json& meta) {
  const InitialCondition kind = *effective_ic(cfg);
  const Domain domain = default_domain(kind);
  const auto grid = make_grid_1d(static_cast<std::ptrdiff_t>(cfg.nx), domain.x_min,
                                 domain.x_max);
  const auto ic = initial_condition_1d(kind, grid, effective_ic_params(cfg));
  const AdvectionScheme scheme(cfg.scheme, cfg.c, cfg.ht, grid);
  const Bootstrap method = cfg.bootstrap.value_or(default_bootstrap(true));

  Output out(cfg.out);
  const std::size_t every = snapshot_interval(cfg);
  AdvectionRunOptions options;
  options.on_level = [&](std::size_t level, double t, const Field1D& u) {
    if (level % every == 0 || level + 1 == cfg.nt) {
      write_snapshot(out.path(level_name("u", level)), u, t);
    }
  };
  const auto run = run_advection(scheme, ic.field, cfg.nt, method, &ic.profile, options);
  write_invariants(out.path("invariants.csv"), run.invariants);

  meta["scheme"] = std::string(to_string(cfg.scheme));
  meta["courant"] = scheme.courant();
  meta["bootstrap"] = method == Bootstrap::ExactShift ? "exact" : "cn";
  log << "advect " << to_string(cfg.scheme) << ": " << cfg.nt << " levels, courant "
      << scheme.courant() << '\n';
  return {out.files(), drift_1d(run.invariants)};
}

RunSummary run_vort(const RunConfig& cfg, std::ostream& log, json& meta) {
  const InitialCondition kind = *effective_ic(cfg);
  const Domain d = default_domain(kind);
  const auto grid = make_grid_2d(static_cast<std::ptrdiff_t>(cfg.nx), d.x_min, d.x_max,
                                 static_cast<std::ptrdiff_t>(cfg.ny), d.y_min, d.y_max);
  const auto ic = initial_condition_2d(kind, grid, effective_ic_params(cfg));
  PicardConfig picard;
  picard.tolerance = cfg.picard_tol;

  Output out(cfg.out);
  const auto observer = [&](std::size_t level, const VorticityState& s) {
    write_snapshot(out.path(level_name("omega", level)), s.omega, s.t);
    write_snapshot(out.path(level_name("psi", level)), s.psi, s.t);
  };
  const std::size_t every = snapshot_interval(cfg);
  const auto run = ic.psi_fixed
      ? run_linear_vorticity(*ic.psi_fixed, ic.omega, cfg.ht, cfg.nt, picard, every, observer)
      : run_vorticity(ic.omega, cfg.ht, cfg.nt, picard, every, observer);
  write_invariants(out.path("invariants.csv"), run.invariants);

  meta["linear"] = ic.psi_fixed.has_value();
  meta["max_picard_iterations"] = run.max_picard_iterations;
  meta["krylov_iterations"] = run.krylov_iterations;
  log << "vorticity " << to_string(kind) << ": " << cfg.nt << " steps on " << cfg.nx
      << "x" << cfg.ny << ", max Picard iterations " << run.max_picard_iterations << '\n';
  return {out.files(), drift_2d(run.invariants)};
}

RunSummary run_disp(const RunConfig& cfg, std::ostream& log, json& meta) {
  Output out(cfg.out);
  const auto ic_kind = effective_ic(cfg);
  double nu = cfg.nu;
  std::vector<SpectralPeak> peaks;
  RunSummary summary;
  if (ic_kind) {
    const Domain domain = default_domain(*ic_kind);
    const auto grid = make_grid_1d(static_cast<std::ptrdiff_t>(cfg.nx), domain.x_min,
                                   domain.x_max);
    const auto ic = initial_condition_1d(*ic_kind, grid, effective_ic_params(cfg));
    const AdvectionScheme scheme(cfg.scheme, cfg.c, cfg.ht, grid);
    nu = scheme.courant();
    AdvectionRunOptions options;
    options.record_spacetime = true;
    const Bootstrap method = cfg.bootstrap.value_or(default_bootstrap(true));
    const auto run = run_advection(scheme, ic.field, cfg.nt, method, &ic.profile, options);
    peaks = experimental_dispersion(*run.spacetime);
    write_invariants(out.path("invariants.csv"), run.invariants);
    summary.drift = drift_1d(run.invariants);
    meta["experimental_peaks"] = peaks.size();
  } else {
    write_invariants(out.path("invariants.csv"), InvariantSeries1D{});
  }
  const auto xi = xi_grid(cfg.nx);
  const auto curve = solve_dispersion(cfg.scheme, nu, xi);
  write_dispersion(out.path("dispersion.csv"), curve, peaks);
  meta["scheme"] = std::string(to_string(cfg.scheme));
  meta["nu"] = nu;
  log << "dispersion " << to_string(cfg.scheme) << ": nu " << nu << ", " << xi.size()
      << " samples, " << peaks.size() << " experimental peaks\n";
  summary.files = out.files();
  return summary;
}

}  // namespace

RunSummary run_experiment(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  json meta = base_metadata(cfg);
  RunSummary summary;
  switch (cfg.command) {
    case Command::Advect: summary = run_advect(cfg, log, meta); break;
    case Command::Vorticity: summary = run_vort(cfg, log, meta); break;
    case Command::Dispersion: summary = run_disp(cfg, log, meta); break;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  meta["drift"] = summary.drift;
  meta["files"] = summary.files;
  meta["runtime_seconds"] = elapsed.count();

  const std::string path = (fs::path(cfg.out) / "run.json").string();
  std::ofstream out(path);
  out << meta.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
  summary.files.push_back("run.json");
  return summary;
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidParam:
    case ErrorKind::UnsupportedBootstrap:
      return 2;
    case ErrorKind::NonConvergence:
    case ErrorKind::LinearSolve:
      return 3;
    case ErrorKind::InvalidGrid:
    case ErrorKind::InvalidField:
    case ErrorKind::GridMismatch:
    case ErrorKind::SingularSystem:
      return 4;
    case ErrorKind::Io:
      return 1;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty() || args[0] == "--help" || args[0] == "-h" ||
      (args.size() > 1 && (args[1] == "--help" || args[1] == "-h"))) {
    (args.empty() ? err : out) << usage();
    return args.empty() ? 2 : 0;
  }
  try {
    const RunConfig cfg = parse_config(args);
    const auto summary = run_experiment(cfg, out);
    for (const auto& [name, value] : summary.drift) {
      out << "  drift " << name << " = " << format_value(value) << '\n';
    }
    return 0;
  } catch (const Error& e) {
    err << "varpde: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "varpde: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace varpde
