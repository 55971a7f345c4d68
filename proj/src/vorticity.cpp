#include "varpde/vorticity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

double sup_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double norm2(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

}  // namespace

void PicardConfig::validate() const {
  if (!(tolerance > 0.0) || !(inner_tolerance > 0.0)) {
    throw Error(ErrorKind::InvalidParam, "Picard tolerances must be positive");
  }
  if (max_iterations < 1 || inner_restart < 1 || inner_max_iterations < 1) {
    throw Error(ErrorKind::InvalidParam, "Picard iteration limits must be >= 1");
  }
}

VorticityState make_vorticity_state(const Field2D& omega, double t) {
  return VorticityState{omega, poisson_solve(omega), t};
}

VorticityIntegrator::VorticityIntegrator(const PeriodicGrid2D& grid,
                                         PicardConfig config)
    : grid_(grid), config_(config), bracket_(grid), poisson_(grid) {
  config_.validate();
}

GmresResult VorticityIntegrator::solve_transport(std::span<const double> psi_bar,
                                                 std::span<const double> omega,
                                                 double h_t,
                                                 std::span<double> out) const {
  const double weight = 0.5 * h_t;
  std::vector<double> rhs(omega.begin(), omega.end());
  bracket_.accumulate(psi_bar, omega, -weight, rhs);

  const LinearOperator op = [&](std::span<const double> v, std::span<double> y) {
    std::copy(v.begin(), v.end(), y.begin());
    bracket_.accumulate(psi_bar, v, weight, y);
  };
  GmresOptions options;
  options.relative_tolerance = config_.inner_tolerance;
  options.restart = config_.inner_restart;
  options.max_iterations = config_.inner_max_iterations;
  const auto result = gmres(op, rhs, out, options);
  // Missing the (very tight) target only because of the round-off floor is
  // acceptable; anything looser means the Krylov solve genuinely failed.
  if (!result.converged && result.residual > 1e-10 * std::max(norm2(rhs), 1e-300)) {
    std::ostringstream msg;
    msg << "transport solve did not converge: residual " << result.residual
        << " after " << result.iterations << " iterations";
    throw Error(ErrorKind::LinearSolve, msg.str());
  }
  return result;
}

VorticityState VorticityIntegrator::step(const VorticityState& state, double h_t,
                                         StepReport* report) const {
  if (!(state.omega.grid() == grid_) || !(state.psi.grid() == grid_)) {
    throw Error(ErrorKind::GridMismatch, "vorticity_step: state grid mismatch");
  }
  if (!std::isfinite(h_t) || h_t == 0.0) {
    throw Error(ErrorKind::InvalidParam, "vorticity_step: h_t must be nonzero");
  }
  const std::size_t size = grid_.size();
  const auto omega = state.omega.values();
  const auto psi = state.psi.values();

  std::vector<double> omega_next(omega.begin(), omega.end());
  std::vector<double> psi_next(psi.begin(), psi.end());
  std::vector<double> candidate(size);
  std::vector<double> psi_bar(size);

  StepReport local;
  for (int it = 1; it <= config_.max_iterations; ++it) {
    for (std::size_t i = 0; i < size; ++i) psi_bar[i] = 0.5 * (psi[i] + psi_next[i]);
    candidate = omega_next;
    const auto inner = solve_transport(psi_bar, omega, h_t, candidate);
    local.krylov_iterations += inner.iterations;
    local.picard_iterations = it;
    local.last_update = sup_distance(candidate, omega_next);
    if (!std::isfinite(local.last_update)) break;
    omega_next.swap(candidate);
    poisson_.solve(omega_next, psi_next);
    if (local.last_update <= config_.tolerance) {
      if (report != nullptr) *report = local;
      return VorticityState{Field2D(grid_, std::move(omega_next)),
                            Field2D(grid_, std::move(psi_next)), state.t + h_t};
    }
  }
  std::ostringstream msg;
  msg << "Picard iteration did not reach " << config_.tolerance << " in "
      << config_.max_iterations << " iterations (last update "
      << local.last_update << ")";
  throw NonConvergenceError(msg.str(), local.picard_iterations, local.last_update);
}

Field2D VorticityIntegrator::linear_step(const Field2D& psi_fixed,
                                         const Field2D& omega, double h_t,
                                         StepReport* report) const {
  if (!(psi_fixed.grid() == grid_) || !(omega.grid() == grid_)) {
    throw Error(ErrorKind::GridMismatch, "linear vorticity step: grid mismatch");
  }
  std::vector<double> next(omega.values().begin(), omega.values().end());
  const auto inner = solve_transport(psi_fixed.values(), omega.values(), h_t, next);
  if (report != nullptr) {
    report->picard_iterations = 1;
    report->krylov_iterations = inner.iterations;
    report->last_update = inner.residual;
  }
  return Field2D(grid_, std::move(next));
}

VorticityState vorticity_step(const VorticityState& state, double h_t,
                              const PicardConfig& config) {
  return VorticityIntegrator(state.omega.grid(), config).step(state, h_t);
}

Field2D one_step_residual(const VorticityState& from, const Field2D& omega_next,
                          const Field2D& psi_next, double h_t) {
  const auto bracket = bracket_time_avg(from.psi, psi_next, from.omega, omega_next);
  const auto w0 = from.omega.values();
  const auto w1 = omega_next.values();
  const auto b = bracket.values();
  std::vector<double> r(w0.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (w1[i] - w0[i]) / h_t + b[i];
  return Field2D(from.omega.grid(), std::move(r));
}

std::pair<Field2D, Field2D> multistep_residual(
    const Field2D& omega_prev, const Field2D& omega_curr, const Field2D& omega_next,
    const Field2D& psi_prev, const Field2D& psi_curr, const Field2D& psi_next,
    double h_t) {
  for (const Field2D* f : {&omega_curr, &omega_next, &psi_prev, &psi_curr, &psi_next}) {
    require_same_grid(omega_prev, *f, "multistep_residual");
  }
  const auto& grid = omega_prev.grid();
  const BracketWorkspace ws(grid);
  const std::size_t size = grid.size();

  std::vector<double> vort(size);
  const auto wp = omega_prev.values();
  const auto wn = omega_next.values();
  for (std::size_t i = 0; i < size; ++i) vort[i] = (wn[i] - wp[i]) / (2.0 * h_t);
  const double e = 1.0 / 8.0;
  ws.accumulate(psi_next.values(), omega_next.values(), e, vort);
  ws.accumulate(psi_curr.values(), omega_next.values(), e, vort);
  ws.accumulate(psi_next.values(), omega_curr.values(), e, vort);
  ws.accumulate(psi_curr.values(), omega_curr.values(), 2.0 * e, vort);
  ws.accumulate(psi_prev.values(), omega_curr.values(), e, vort);
  ws.accumulate(psi_curr.values(), omega_prev.values(), e, vort);
  ws.accumulate(psi_prev.values(), omega_prev.values(), e, vort);

  const auto lp = laplacian(psi_prev);
  const auto lc = laplacian(psi_curr);
  const auto ln = laplacian(psi_next);
  const double mp = omega_prev.mean();
  const double mc = omega_curr.mean();
  const double mn = omega_next.mean();
  const auto wc = omega_curr.values();
  std::vector<double> pois(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double lap = 0.25 * (lp.values()[i] + 2.0 * lc.values()[i] + ln.values()[i]);
    const double rhs = 0.25 * ((wp[i] - mp) + 2.0 * (wc[i] - mc) + (wn[i] - mn));
    pois[i] = lap - rhs;
  }
  return {Field2D(grid, std::move(vort)), Field2D(grid, std::move(pois))};
}

namespace {

template <typename Advance>
VorticityRun drive(VorticityState state, std::size_t n_t, std::size_t snapshot_every,
                   const VorticityObserver& on_snapshot, Advance&& advance) {
  const std::size_t every = std::max<std::size_t>(1, snapshot_every);
  VorticityRun run;
  run.invariants.reserve(n_t + 1);
  auto record = [&](std::size_t level, const VorticityState& s) {
    run.invariants.push_back(invariants_2d(s.omega, s.psi, s.t));
    if (level % every == 0 || level == n_t) {
      run.snapshots.push_back(s);
      if (on_snapshot) on_snapshot(level, s);
    }
  };
  record(0, state);
  for (std::size_t i = 1; i <= n_t; ++i) {
    StepReport report;
    state = advance(state, report);
    run.max_picard_iterations = std::max(run.max_picard_iterations, report.picard_iterations);
    run.krylov_iterations += report.krylov_iterations;
    record(i, state);
  }
  run.last = std::move(state);
  return run;
}

}  // namespace

VorticityRun run_vorticity(const Field2D& omega0, double h_t, std::size_t n_t,
                           const PicardConfig& config, std::size_t snapshot_every,
                           const VorticityObserver& on_snapshot) {
  const VorticityIntegrator integrator(omega0.grid(), config);
  VorticityState initial{omega0, integrator.poisson().solve(omega0), 0.0};
  return drive(std::move(initial), n_t, snapshot_every, on_snapshot,
               [&](const VorticityState& s, StepReport& report) {
                 return integrator.step(s, h_t, &report);
               });
}

VorticityRun run_linear_vorticity(const Field2D& psi_fixed, const Field2D& omega0,
                                  double h_t, std::size_t n_t,
                                  const PicardConfig& config,
                                  std::size_t snapshot_every,
                                  const VorticityObserver& on_snapshot) {
  require_same_grid(psi_fixed, omega0, "run_linear_vorticity");
  const VorticityIntegrator integrator(omega0.grid(), config);
  VorticityState initial{omega0, psi_fixed, 0.0};
  return drive(std::move(initial), n_t, snapshot_every, on_snapshot,
               [&](const VorticityState& s, StepReport& report) {
                 return VorticityState{
                     integrator.linear_step(psi_fixed, s.omega, h_t, &report),
                     psi_fixed, s.t + h_t};
               });
}

}  // namespace varpde
