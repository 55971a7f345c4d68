#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "varpde/grid.hpp"
#include "varpde/scheme_kind.hpp"

namespace varpde {

// Numerical dispersion of the advection schemes for the collocated plane
// wave u_{ij} = exp(-i (tau i - xi j)), with xi the phase shift per grid
// step, tau the phase shift per time step and nu = c / c_grid = c h_t / h_x.

/// Real-valued dispersion function whose zeros are the admissible (tau, xi):
///   Veselov:    sin(tau)(1 + cos xi) - nu (1 + cos tau) sin xi
///   Simplified: sin(tau) - (nu/2)(1 + cos tau) sin xi
///   Leapfrog:   sin(tau) - nu sin xi
double dispersion_residual(AdvectionKind kind, double tau, double xi, double nu);

enum class Branch { Principal, Parasitic };

const char* to_string(Branch branch) noexcept;

struct DispersionSample {
  double xi;
  /// Empty when the branch has no real root at this xi (leapfrog beyond the
  /// CFL limit, |nu sin xi| > 1).
  std::optional<double> tau;
  Branch branch;
};

struct DispersionCurve {
  AdvectionKind kind;
  double nu;
  std::vector<DispersionSample> samples;
};

/// Principal branches from the half-angle closed forms
///   Veselov:    tan(tau/2) = nu tan(xi/2)
///   Simplified: tan(tau/2) = (nu/2) sin xi
///   Leapfrog:   sin tau = nu sin xi
/// plus the leapfrog parasitic branch sign(xi)(pi - |asin(nu sin xi)|).
/// Every emitted root is checked against dispersion_residual to 1e-10.
DispersionCurve solve_dispersion(AdvectionKind kind, double nu,
                                 std::span<const double> xi_samples);

/// count evenly spaced xi values covering [-pi, pi] inclusive.
std::vector<double> xi_grid(std::size_t count);

/// Every real root tau in (-pi, pi] at this xi. Besides the closed-form
/// branches this includes tau = pi for the implicit schemes, whose
/// dispersion functions carry a factor cos(tau/2).
std::vector<double> real_roots(AdvectionKind kind, double nu, double xi);

/// Distance on the circle from tau to the nearest real root at xi.
/// Infinite if there is no real root.
double distance_to_branches(AdvectionKind kind, double nu, double xi, double tau);

/// |a - b| measured modulo 2 pi.
double circular_distance(double a, double b) noexcept;

struct SpectralPeak {
  std::size_t k;  // spatial wavenumber index, xi = 2 pi k / n
  double xi;
  double tau;     // centre of the strongest temporal bin, in (-pi, pi]
  double magnitude;
};

/// Two-dimensional DFT of the space-time field with kernel
/// exp(+i (tau i - xi j)), so that the mode exp(-i (tau0 i - xi0 j)) peaks at
/// (xi0, tau0). Returns, for each column k = 0..n/2, the temporal bin of
/// largest magnitude (no sub-bin interpolation). Empty for a zero field.
std::vector<SpectralPeak> experimental_dispersion(const SpacetimeField1D& field);

}  // namespace varpde
