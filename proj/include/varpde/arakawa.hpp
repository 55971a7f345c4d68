#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varpde/grid.hpp"

namespace varpde {

// Arakawa's discretisation of the Poisson bracket {psi, w} = psi_x w_y -
// psi_y w_x on a periodic 2D grid. Shifts are written (x, y): w_{+-} is the
// value at (j+1, k-1) with j the x-index and k the y-index.
//
//   A++ = [(psi_{+0} - psi_{-0})(w_{0+} - w_{0-})
//          - (psi_{0+} - psi_{0-})(w_{+0} - w_{-0})] / (4 hx hy)
//   A+x = [psi_{+0}(w_{++} - w_{+-}) - psi_{-0}(w_{-+} - w_{--})
//          - psi_{0+}(w_{++} - w_{-+}) + psi_{0-}(w_{+-} - w_{--})] / (4 hx hy)
//   Ax+ = [psi_{++}(w_{0+} - w_{+0}) - psi_{--}(w_{-0} - w_{0-})
//          - psi_{-+}(w_{0+} - w_{-0}) + psi_{+-}(w_{+0} - w_{0-})] / (4 hx hy)
//   A   = (A++ + A+x + Ax+) / 3
//
// A conserves sum A, sum w A and sum psi A exactly on periodic grids.

/// Stencil evaluator with precomputed periodic neighbour tables and scratch
/// storage for the three components.
class BracketWorkspace {
 public:
  explicit BracketWorkspace(const PeriodicGrid2D& grid);

  const PeriodicGrid2D& grid() const noexcept { return grid_; }

  /// out += weight * A(psi, omega). Spans must have grid().size() entries.
  void accumulate(std::span<const double> psi, std::span<const double> omega,
                  double weight, std::span<double> out) const;

  struct Components {
    std::vector<double> pp;
    std::vector<double> px;
    std::vector<double> xp;
  };

  /// Evaluates the three component stencils into the workspace scratch.
  const Components& components(std::span<const double> psi,
                               std::span<const double> omega);

 private:
  PeriodicGrid2D grid_;
  std::vector<std::size_t> x_plus_, x_minus_, y_plus_, y_minus_;
  Components scratch_;
};

Field2D arakawa_pp(const Field2D& psi, const Field2D& omega);
Field2D arakawa_px(const Field2D& psi, const Field2D& omega);
Field2D arakawa_xp(const Field2D& psi, const Field2D& omega);

/// The one-third average of the three component stencils.
Field2D arakawa(const Field2D& psi, const Field2D& omega);

/// (1/4)[A(psi_c, w_c) + A(psi_c, w_p) + A(psi_p, w_c) + A(psi_p, w_p)], the
/// bracket of the one-step vorticity integrator.
Field2D bracket_time_avg(const Field2D& psi_prev, const Field2D& psi_curr,
                         const Field2D& omega_prev, const Field2D& omega_curr);

}  // namespace varpde
