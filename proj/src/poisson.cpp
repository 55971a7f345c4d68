#include "varpde/poisson.hpp"

#include <cmath>
#include <numbers>

#include "varpde/errors.hpp"

namespace varpde {

Field2D laplacian(const Field2D& psi) {
  const auto& g = psi.grid();
  const double ix2 = 1.0 / (g.hx() * g.hx());
  const double iy2 = 1.0 / (g.hy() * g.hy());
  std::vector<double> out(g.size());
  for (std::size_t k = 0; k < g.ny(); ++k) {
    for (std::size_t j = 0; j < g.nx(); ++j) {
      const auto jj = static_cast<std::ptrdiff_t>(j);
      const auto kk = static_cast<std::ptrdiff_t>(k);
      const double c = psi(j, k);
      out[g.index(j, k)] = (psi.at(jj - 1, kk) - 2.0 * c + psi.at(jj + 1, kk)) * ix2 +
                           (psi.at(jj, kk - 1) - 2.0 * c + psi.at(jj, kk + 1)) * iy2;
    }
  }
  return Field2D(g, std::move(out));
}

PoissonSolver::PoissonSolver(const PeriodicGrid2D& grid)
    : grid_(grid), dft_(grid.ny(), grid.nx()), inverse_symbol_(grid.size()) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double ix2 = 1.0 / (grid.hx() * grid.hx());
  const double iy2 = 1.0 / (grid.hy() * grid.hy());
  for (std::size_t ky = 0; ky < grid.ny(); ++ky) {
    const double sy =
        (2.0 - 2.0 * std::cos(two_pi * static_cast<double>(ky) /
                              static_cast<double>(grid.ny()))) * iy2;
    for (std::size_t kx = 0; kx < grid.nx(); ++kx) {
      const double sx =
          (2.0 - 2.0 * std::cos(two_pi * static_cast<double>(kx) /
                                static_cast<double>(grid.nx()))) * ix2;
      const double lambda = -(sx + sy);
      inverse_symbol_[grid.index(kx, ky)] =
          (kx == 0 && ky == 0) ? 0.0 : 1.0 / lambda;
    }
  }
}

void PoissonSolver::solve(std::span<const double> omega, std::span<double> psi) const {
  const std::size_t size = grid_.size();
  if (omega.size() != size || psi.size() != size) {
    throw Error(ErrorKind::GridMismatch, "poisson_solve: size mismatch");
  }
  std::vector<Complex> work(omega.begin(), omega.end());
  std::vector<Complex> spectrum(size);
  dft_.forward(work, spectrum);
  for (std::size_t i = 0; i < size; ++i) spectrum[i] *= inverse_symbol_[i];
  dft_.backward(spectrum, work);

  const double scale = 1.0 / static_cast<double>(size);
  double mean = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    psi[i] = work[i].real() * scale;
    mean += psi[i];
  }
  mean /= static_cast<double>(size);
  for (double& v : psi) v -= mean;
}

Field2D PoissonSolver::solve(const Field2D& omega) const {
  if (!(omega.grid() == grid_)) {
    throw Error(ErrorKind::GridMismatch, "poisson_solve: grid mismatch");
  }
  std::vector<double> psi(grid_.size());
  solve(omega.values(), psi);
  return Field2D(grid_, std::move(psi));
}

Field2D poisson_solve(const Field2D& omega) {
  return PoissonSolver(omega.grid()).solve(omega);
}

}  // namespace varpde
