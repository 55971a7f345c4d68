#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "varpde/circulant.hpp"
#include "varpde/conservation.hpp"
#include "varpde/grid.hpp"
#include "varpde/scheme_kind.hpp"

namespace varpde {

/// Variational integrator for u_t + c u_x = 0 on a periodic grid. The
/// schemes are two-step recursions u_{i+1} = step(u_{i-1}, u_i).
///
/// Veselov requires an odd point count: its averaged time-difference
/// operator (1/4)[1 2 1] and the centred difference both annihilate the
/// Nyquist mode, which exists only for even n.
class AdvectionScheme {
 public:
  AdvectionScheme(AdvectionKind kind, double c, double h_t,
                  const PeriodicGrid1D& grid);

  AdvectionKind kind() const noexcept { return kind_; }
  double c() const noexcept { return c_; }
  double h_t() const noexcept { return h_t_; }
  const PeriodicGrid1D& grid() const noexcept { return grid_; }
  /// Courant number c h_t / h_x, the ratio c / c_grid.
  double courant() const noexcept { return c_ * h_t_ / grid_.h; }

  Field1D step(const Field1D& u_prev, const Field1D& u_curr) const;

  /// Left-hand side of the scheme's stencil equation evaluated at every
  /// node; zero for an exact step.
  std::vector<double> residual(const Field1D& u_prev, const Field1D& u_curr,
                               const Field1D& u_next) const;

  /// Scale for residual checks: |u|/h_t + |c||u|/h_x.
  double residual_scale(const Field1D& u) const noexcept;

  /// The circulant system solved for u_next (empty for the explicit scheme).
  const CirculantOperator* implicit_operator() const noexcept {
    return implicit_.get();
  }

 private:
  AdvectionKind kind_;
  double c_;
  double h_t_;
  PeriodicGrid1D grid_;
  std::shared_ptr<const CirculantOperator> implicit_;
};

Field1D step_veselov(const AdvectionScheme& scheme, const Field1D& u_prev,
                     const Field1D& u_curr);
Field1D step_leapfrog(const AdvectionScheme& scheme, const Field1D& u_prev,
                      const Field1D& u_curr);
Field1D step_simplified_implicit(const AdvectionScheme& scheme,
                                 const Field1D& u_prev, const Field1D& u_curr);

/// How the second time level is produced from u0.
enum class Bootstrap { ExactShift, CrankNicolson };

/// The generating function of an initial condition, u0(x).
using Profile1D = std::function<double(double)>;

/// ExactShift samples u0(x - c h_t) (periodically wrapped) and needs the
/// profile; CrankNicolson solves (u1 - u0)/h_t + (c/2) D_x (u1 + u0) = 0 with
/// the centred difference D_x.
Field1D bootstrap_second_level(const AdvectionScheme& scheme, const Field1D& u0,
                               Bootstrap method,
                               const Profile1D* profile = nullptr);

/// ExactShift when an analytic profile is available, CrankNicolson otherwise.
constexpr Bootstrap default_bootstrap(bool has_profile) noexcept {
  return has_profile ? Bootstrap::ExactShift : Bootstrap::CrankNicolson;
}

struct AdvectionRunOptions {
  bool record_spacetime = false;
  /// Called once per time level with (level index, time, field).
  std::function<void(std::size_t, double, const Field1D&)> on_level;
};

struct AdvectionRun {
  std::optional<SpacetimeField1D> spacetime;
  /// One record per consecutive level pair (i, i+1), reported at t_i.
  InvariantSeries1D invariants;
  Field1D last;
};

/// Produces n_t time levels starting from u0 at t = 0.
AdvectionRun run_advection(const AdvectionScheme& scheme, const Field1D& u0,
                           std::size_t n_t, Bootstrap method,
                           const Profile1D* profile = nullptr,
                           const AdvectionRunOptions& options = {});

}  // namespace varpde
