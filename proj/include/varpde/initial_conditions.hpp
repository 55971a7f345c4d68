#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "varpde/advection.hpp"
#include "varpde/grid.hpp"

namespace varpde {

enum class InitialCondition {
  CosineSum,
  Gaussian,
  SeparatrixLinear,
  GaussianVortex,
  LambDipole,
  VortexSheet,
};

const char* to_string(InitialCondition kind) noexcept;
/// Accepts cosine, gaussian, separatrix, gaussian-vortex, lamb-dipole,
/// vortex-sheet. Throws InvalidParam otherwise.
InitialCondition parse_initial_condition(std::string_view name);
bool is_two_dimensional(InitialCondition kind) noexcept;

/// IC parameters. Only the ones a kind uses are required.
struct IcParams {
  std::optional<double> sigma;    // Gaussian
  std::optional<double> sigma_x;  // 2D Gaussians
  std::optional<double> sigma_y;
  std::optional<double> x0;       // Gaussian centres
  std::optional<double> y0;
  std::optional<double> radius;   // Lamb dipole
  std::optional<double> speed;
  std::optional<double> rho;      // vortex sheet

  bool operator==(const IcParams&) const = default;
};

/// The parameter set of the reference experiment for each kind.
IcParams default_ic_params(InitialCondition kind);

struct Domain {
  double x_min, x_max, y_min, y_max;
};

/// Reference domain for each kind (1D kinds use only the x range).
Domain default_domain(InitialCondition kind) noexcept;

struct InitialCondition1D {
  Field1D field;
  /// Generating closure, usable for the exact-shift bootstrap.
  Profile1D profile;
};

InitialCondition1D initial_condition_1d(InitialCondition kind,
                                        const PeriodicGrid1D& grid,
                                        const IcParams& params);

struct InitialCondition2D {
  Field2D omega;
  /// Prescribed streaming function for frozen-psi runs.
  std::optional<Field2D> psi_fixed;
};

InitialCondition2D initial_condition_2d(InitialCondition kind,
                                        const PeriodicGrid2D& grid,
                                        const IcParams& params);

/// First positive zero of J1, found by bisection.
double bessel_j1_first_root();

/// (sigma sqrt(2 pi))^-1 exp(-((z - z0)/sigma)^2 / 2)
double gaussian_profile(double z, double z0, double sigma) noexcept;

}  // namespace varpde
