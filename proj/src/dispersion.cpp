#include "varpde/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "varpde/errors.hpp"
#include "varpde/fft.hpp"

namespace varpde {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTolerance = 1e-10;

void check_root(AdvectionKind kind, double nu, double xi, double tau) {
  const double r = dispersion_residual(kind, tau, xi, nu);
  if (!(std::abs(r) <= kRootTolerance)) {
    std::ostringstream msg;
    msg << "dispersion root check failed for " << to_string(kind) << ": xi=" << xi
        << " tau=" << tau << " residual=" << r;
    throw std::logic_error(msg.str());
  }
}

std::optional<double> principal_tau(AdvectionKind kind, double nu, double xi) {
  switch (kind) {
    case AdvectionKind::Veselov:
      return 2.0 * std::atan(nu * std::tan(0.5 * xi));
    case AdvectionKind::SimplifiedImplicit:
      return 2.0 * std::atan(0.5 * nu * std::sin(xi));
    case AdvectionKind::Leapfrog: {
      const double s = nu * std::sin(xi);
      if (std::abs(s) > 1.0) return std::nullopt;
      return std::asin(s);
    }
  }
  return std::nullopt;
}

double leapfrog_parasitic(double principal, double xi) {
  const double sign = xi < 0.0 ? -1.0 : 1.0;
  return sign * (kPi - std::abs(principal));
}

}  // namespace

double dispersion_residual(AdvectionKind kind, double tau, double xi, double nu) {
  switch (kind) {
    case AdvectionKind::Veselov:
      return std::sin(tau) * (1.0 + std::cos(xi)) -
             nu * (1.0 + std::cos(tau)) * std::sin(xi);
    case AdvectionKind::SimplifiedImplicit:
      return std::sin(tau) - 0.5 * nu * (1.0 + std::cos(tau)) * std::sin(xi);
    case AdvectionKind::Leapfrog:
      return std::sin(tau) - nu * std::sin(xi);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

const char* to_string(Branch branch) noexcept {
  return branch == Branch::Principal ? "principal" : "parasitic";
}

DispersionCurve solve_dispersion(AdvectionKind kind, double nu,
                                 std::span<const double> xi_samples) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    throw Error(ErrorKind::InvalidParam, "solve_dispersion: nu must be positive");
  }
  DispersionCurve curve{kind, nu, {}};
  curve.samples.reserve(2 * xi_samples.size());
  for (double xi : xi_samples) {
    if (!std::isfinite(xi) || std::abs(xi) > kPi) {
      throw Error(ErrorKind::InvalidParam, "solve_dispersion: xi outside [-pi, pi]");
    }
    const auto tau = principal_tau(kind, nu, xi);
    if (tau) check_root(kind, nu, xi, *tau);
    curve.samples.push_back({xi, tau, Branch::Principal});
    if (kind == AdvectionKind::Leapfrog && tau) {
      const double parasitic = leapfrog_parasitic(*tau, xi);
      check_root(kind, nu, xi, parasitic);
      curve.samples.push_back({xi, parasitic, Branch::Parasitic});
    }
  }
  return curve;
}

std::vector<double> xi_grid(std::size_t count) {
  if (count < 2) {
    throw Error(ErrorKind::InvalidParam, "xi_grid needs at least 2 samples");
  }
  std::vector<double> xi(count);
  for (std::size_t m = 0; m < count; ++m) {
    xi[m] = -kPi + 2.0 * kPi * static_cast<double>(m) / static_cast<double>(count - 1);
  }
  xi.back() = kPi;
  return xi;
}

std::vector<double> real_roots(AdvectionKind kind, double nu, double xi) {
  std::vector<double> roots;
  const auto tau = principal_tau(kind, nu, xi);
  if (tau) {
    roots.push_back(*tau);
    if (kind == AdvectionKind::Leapfrog) roots.push_back(leapfrog_parasitic(*tau, xi));
  }
  if (kind != AdvectionKind::Leapfrog) roots.push_back(kPi);
  return roots;
}

double circular_distance(double a, double b) noexcept {
  const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

double distance_to_branches(AdvectionKind kind, double nu, double xi, double tau) {
  double best = std::numeric_limits<double>::infinity();
  for (double root : real_roots(kind, nu, xi)) {
    best = std::min(best, circular_distance(tau, root));
  }
  return best;
}

std::vector<SpectralPeak> experimental_dispersion(const SpacetimeField1D& field) {
  const std::size_t n_t = field.n_t();
  const std::size_t n = field.n();
  if (n_t < 16 || n < 16) {
    throw Error(ErrorKind::InvalidParam,
                "experimental_dispersion needs at least 16 levels and 16 points");
  }
  const std::size_t columns = n / 2 + 1;

  // spatial transform of each row, keeping the non-negative wavenumbers
  const Dft1D space(n);
  std::vector<Complex> row_in(n);
  std::vector<Complex> row_out(n);
  std::vector<Complex> spectrum(columns * n_t);
  for (std::size_t i = 0; i < n_t; ++i) {
    const auto row = field.row(i);
    std::copy(row.begin(), row.end(), row_in.begin());
    space.forward(row_in, row_out);
    for (std::size_t k = 0; k < columns; ++k) spectrum[k * n_t + i] = row_out[k];
  }

  const Dft1D time(n_t);
  std::vector<Complex> col_out(n_t);
  std::vector<SpectralPeak> peaks;
  peaks.reserve(columns);
  double global_max = 0.0;
  for (std::size_t k = 0; k < columns; ++k) {
    const std::span<const Complex> col(spectrum.data() + k * n_t, n_t);
    time.backward(col, col_out);
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t m = 0; m < n_t; ++m) {
      const double mag = std::abs(col_out[m]);
      if (mag > best_mag) {
        best_mag = mag;
        best = m;
      }
    }
    global_max = std::max(global_max, best_mag);
    if (best_mag <= 0.0) continue;
    const auto signed_bin = best > n_t / 2
                                ? static_cast<double>(best) - static_cast<double>(n_t)
                                : static_cast<double>(best);
    peaks.push_back({k, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n),
                     2.0 * kPi * signed_bin / static_cast<double>(n_t), best_mag});
  }
  if (global_max <= 0.0) return {};
  return peaks;
}

}  // namespace varpde
