#pragma once

#include <vector>

#include "varpde/fft.hpp"
#include "varpde/grid.hpp"

namespace varpde {

/// Five-point periodic Laplacian
///   (psi_{j-1,k} - 2 psi_{j,k} + psi_{j+1,k}) / hx^2
/// + (psi_{j,k-1} - 2 psi_{j,k} + psi_{j,k+1}) / hy^2.
Field2D laplacian(const Field2D& psi);

/// Solves Laplacian(psi) = omega - mean(omega) for the zero-mean psi by
/// diagonalising with the 2D DFT. Discrete symbol:
///   lambda(kx, ky) = -(2 - 2 cos(2 pi kx / nx)) / hx^2
///                    -(2 - 2 cos(2 pi ky / ny)) / hy^2,
/// with the zero mode mapped to zero.
class PoissonSolver {
 public:
  explicit PoissonSolver(const PeriodicGrid2D& grid);

  const PeriodicGrid2D& grid() const noexcept { return grid_; }
  Field2D solve(const Field2D& omega) const;
  /// Same, writing into a caller buffer.
  void solve(std::span<const double> omega, std::span<double> psi) const;

 private:
  PeriodicGrid2D grid_;
  Dft2D dft_;
  std::vector<double> inverse_symbol_;
};

Field2D poisson_solve(const Field2D& omega);

}  // namespace varpde
