#include "varpde/initial_conditions.hpp"

#include <cmath>
#include <numbers>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

constexpr double pi = std::numbers::pi;

double require(const std::optional<double>& v, const char* name, bool positive) {
  if (!v) {
    throw Error(ErrorKind::InvalidParam, std::string("missing IC parameter ") + name);
  }
  if (!std::isfinite(*v) || (positive && !(*v > 0.0))) {
    throw Error(ErrorKind::InvalidParam,
                std::string("IC parameter ") + name + " must be " +
                    (positive ? "positive" : "finite"));
  }
  return *v;
}

}  // namespace

const char* to_string(InitialCondition kind) noexcept {
  switch (kind) {
    case InitialCondition::CosineSum: return "cosine";
    case InitialCondition::Gaussian: return "gaussian";
    case InitialCondition::SeparatrixLinear: return "separatrix";
    case InitialCondition::GaussianVortex: return "gaussian-vortex";
    case InitialCondition::LambDipole: return "lamb-dipole";
    case InitialCondition::VortexSheet: return "vortex-sheet";
  }
  return "?";
}

InitialCondition parse_initial_condition(std::string_view name) {
  for (auto kind : {InitialCondition::CosineSum, InitialCondition::Gaussian,
                    InitialCondition::SeparatrixLinear, InitialCondition::GaussianVortex,
                    InitialCondition::LambDipole, InitialCondition::VortexSheet}) {
    if (name == to_string(kind)) return kind;
  }
  throw Error(ErrorKind::InvalidParam,
              "unknown initial condition '" + std::string(name) + "'");
}

bool is_two_dimensional(InitialCondition kind) noexcept {
  return kind != InitialCondition::CosineSum && kind != InitialCondition::Gaussian;
}

IcParams default_ic_params(InitialCondition kind) {
  IcParams p;
  switch (kind) {
    case InitialCondition::CosineSum:
      break;
    case InitialCondition::Gaussian:
      p.sigma = 0.1;
      p.x0 = 0.0;
      break;
    case InitialCondition::SeparatrixLinear:
      p.sigma_x = 0.2;
      p.sigma_y = 0.2;
      p.x0 = 0.0;
      p.y0 = 2.0;
      break;
    case InitialCondition::GaussianVortex:
      p.sigma_x = 0.1;
      p.sigma_y = 0.2;
      p.x0 = 0.0;
      p.y0 = 0.0;
      break;
    case InitialCondition::LambDipole:
      p.radius = 0.2;
      p.speed = 1.0;
      break;
    case InitialCondition::VortexSheet:
      p.rho = 30.0;
      break;
  }
  return p;
}

Domain default_domain(InitialCondition kind) noexcept {
  switch (kind) {
    case InitialCondition::CosineSum:
    case InitialCondition::Gaussian:
      return {-0.5, 0.5, 0.0, 0.0};
    case InitialCondition::SeparatrixLinear:
      return {-2.0 * pi, 2.0 * pi, -2.0 * pi, 2.0 * pi};
    case InitialCondition::GaussianVortex:
    case InitialCondition::LambDipole:
      return {-1.0, 1.0, -1.0, 1.0};
    case InitialCondition::VortexSheet:
      return {0.0, 1.0, 0.0, 1.0};
  }
  return {0.0, 1.0, 0.0, 1.0};
}

double gaussian_profile(double z, double z0, double sigma) noexcept {
  const double s = (z - z0) / sigma;
  return std::exp(-0.5 * s * s) / (sigma * std::sqrt(2.0 * pi));
}

double bessel_j1_first_root() {
  // J1 > 0 on (0, 3.8...) and changes sign once in [3, 4.5]
  double lo = 3.0;
  double hi = 4.5;
  double f_lo = std::cyl_bessel_j(1.0, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = std::cyl_bessel_j(1.0, mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

InitialCondition1D initial_condition_1d(InitialCondition kind,
                                        const PeriodicGrid1D& grid,
                                        const IcParams& params) {
  Profile1D profile;
  switch (kind) {
    case InitialCondition::CosineSum: {
      const std::size_t modes = grid.n / 2;
      profile = [modes](double x) {
        double s = 0.0;
        for (std::size_t i = 1; i <= modes; ++i) {
          s += std::cos(static_cast<double>(i) * 2.0 * pi * x);
        }
        return s;
      };
      break;
    }
    case InitialCondition::Gaussian: {
      const double sigma = require(params.sigma, "sigma", true);
      const double x0 = params.x0 ? require(params.x0, "x0", false) : 0.0;
      profile = [sigma, x0](double x) { return gaussian_profile(x, x0, sigma); };
      break;
    }
    default:
      throw Error(ErrorKind::InvalidParam,
                  std::string("initial condition ") + to_string(kind) + " is not 1D");
  }
  Field1D field = sample_field_1d(grid, profile);
  return {std::move(field), std::move(profile)};
}

InitialCondition2D initial_condition_2d(InitialCondition kind,
                                        const PeriodicGrid2D& grid,
                                        const IcParams& params) {
  switch (kind) {
    case InitialCondition::SeparatrixLinear:
    case InitialCondition::GaussianVortex: {
      const double sx = require(params.sigma_x, "sigma_x", true);
      const double sy = require(params.sigma_y, "sigma_y", true);
      const double x0 = require(params.x0, "x0", false);
      const double y0 = require(params.y0, "y0", false);
      InitialCondition2D ic{sample_field_2d(grid,
                                            [=](double x, double y) {
                                              return gaussian_profile(x, x0, sx) *
                                                     gaussian_profile(y, y0, sy);
                                            }),
                            std::nullopt};
      if (kind == InitialCondition::SeparatrixLinear) {
        ic.psi_fixed = sample_field_2d(
            grid, [](double x, double y) { return 0.5 * y * y + 1.0 - std::cos(x); });
      }
      return ic;
    }
    case InitialCondition::LambDipole: {
      const double radius = require(params.radius, "radius", true);
      const double speed = require(params.speed, "speed", false);
      const double lambda = bessel_j1_first_root() / radius;
      const double scale = 2.0 * lambda * speed / std::cyl_bessel_j(0.0, lambda * radius);
      return {sample_field_2d(grid,
                              [=](double x, double y) {
                                const double r = std::hypot(x, y);
                                if (r > radius || r == 0.0) return 0.0;
                                // theta taken as the polar angle, so cos(theta) = x / r
                                return scale * (x / r) * std::cyl_bessel_j(1.0, lambda * r);
                              }),
              std::nullopt};
    }
    case InitialCondition::VortexSheet: {
      const double rho = require(params.rho, "rho", true);
      return {sample_field_2d(grid,
                              [=](double x, double y) {
                                const double base = 0.1 * pi * std::cos(2.0 * pi * x);
                                if (y <= 0.5) {
                                  const double c = std::cosh(rho * (y - 0.25));
                                  return base - rho / (c * c);
                                }
                                const double c = std::cosh(rho * (0.75 - y));
                                return base + rho / (c * c);
                              }),
              std::nullopt};
    }
    default:
      throw Error(ErrorKind::InvalidParam,
                  std::string("initial condition ") + to_string(kind) + " is not 2D");
  }
}

}  // namespace varpde
