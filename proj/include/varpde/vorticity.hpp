#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "varpde/arakawa.hpp"
#include "varpde/conservation.hpp"
#include "varpde/gmres.hpp"
#include "varpde/grid.hpp"
#include "varpde/poisson.hpp"

namespace varpde {

/// Vorticity w with its zero-mean streaming function psi,
/// Laplacian(psi) = w - mean(w).
struct VorticityState {
  Field2D omega;
  Field2D psi;
  double t = 0.0;
};

/// Builds the state for w0 by solving for psi.
VorticityState make_vorticity_state(const Field2D& omega, double t = 0.0);

struct PicardConfig {
  /// Sup-norm bound on the change of w between Picard iterates.
  double tolerance = 1e-10;
  int max_iterations = 50;
  /// Relative 2-norm tolerance of the inner Krylov solve (system scaled by
  /// h_t so that it reads w' + h_t K w' = rhs).
  double inner_tolerance = 1e-15;
  std::size_t inner_restart = 50;
  std::size_t inner_max_iterations = 2000;

  void validate() const;
};

struct StepReport {
  int picard_iterations = 0;
  double last_update = 0.0;
  std::size_t krylov_iterations = 0;
};

/// One-step variational integrator for w_t + {psi, w} = 0, Laplacian psi = w:
///   (w' - w)/h_t + (1/4)[A(psi', w') + A(psi', w) + A(psi, w') + A(psi, w)] = 0
///   Laplacian psi' = w' - mean(w')
/// solved by Picard iteration: psi' is frozen, the linear system in w' is
/// solved with GMRES, then psi' is refreshed from w'.
class VorticityIntegrator {
 public:
  VorticityIntegrator(const PeriodicGrid2D& grid, PicardConfig config);

  const PeriodicGrid2D& grid() const noexcept { return grid_; }
  const PicardConfig& config() const noexcept { return config_; }
  const PoissonSolver& poisson() const noexcept { return poisson_; }

  VorticityState step(const VorticityState& state, double h_t,
                      StepReport* report = nullptr) const;

  /// Linear case: psi is prescribed and constant in time; a single linear
  /// solve of (w' - w)/h_t + (1/2)[A(psi, w') + A(psi, w)] = 0.
  Field2D linear_step(const Field2D& psi_fixed, const Field2D& omega, double h_t,
                      StepReport* report = nullptr) const;

 private:
  /// Solves w' + (h_t/2) A(psi_bar, w') = w - (h_t/2) A(psi_bar, w), starting
  /// from the guess in out.
  GmresResult solve_transport(std::span<const double> psi_bar,
                              std::span<const double> omega, double h_t,
                              std::span<double> out) const;

  PeriodicGrid2D grid_;
  PicardConfig config_;
  BracketWorkspace bracket_;
  PoissonSolver poisson_;
};

VorticityState vorticity_step(const VorticityState& state, double h_t,
                              const PicardConfig& config);

/// Residuals of the original two-step scheme at level i:
///   (w_{i+1} - w_{i-1})/(2 h_t) + (1/8)[A(p_{i+1},w_{i+1}) + A(p_i,w_{i+1})
///     + A(p_{i+1},w_i) + 2A(p_i,w_i) + A(p_{i-1},w_i) + A(p_i,w_{i-1})
///     + A(p_{i-1},w_{i-1})]
/// and of the time-averaged Poisson equation <Laplacian p>_t = <w - mean w>_t
/// with <f>_t = (f_{i-1} + 2 f_i + f_{i+1}) / 4.
std::pair<Field2D, Field2D> multistep_residual(
    const Field2D& omega_prev, const Field2D& omega_curr, const Field2D& omega_next,
    const Field2D& psi_prev, const Field2D& psi_curr, const Field2D& psi_next,
    double h_t);

/// Residual of the one-step equation for a candidate (w', psi').
Field2D one_step_residual(const VorticityState& from, const Field2D& omega_next,
                          const Field2D& psi_next, double h_t);

struct VorticityRun {
  std::vector<VorticityState> snapshots;
  InvariantSeries2D invariants;
  VorticityState last;
  int max_picard_iterations = 0;
  std::size_t krylov_iterations = 0;
};

using VorticityObserver = std::function<void(std::size_t, const VorticityState&)>;

/// Advances w0 by n_t steps. Snapshots are kept for level 0, every
/// snapshot_every levels, and the final level; invariants at every level.
VorticityRun run_vorticity(const Field2D& omega0, double h_t, std::size_t n_t,
                           const PicardConfig& config, std::size_t snapshot_every,
                           const VorticityObserver& on_snapshot = {});

/// As run_vorticity with psi frozen to psi_fixed (no Poisson solve).
VorticityRun run_linear_vorticity(const Field2D& psi_fixed, const Field2D& omega0,
                                  double h_t, std::size_t n_t,
                                  const PicardConfig& config,
                                  std::size_t snapshot_every,
                                  const VorticityObserver& on_snapshot = {});

}  // namespace varpde
