#include "varpde/advection.hpp"

#include <cmath>
#include <sstream>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

std::vector<StencilTap> implicit_taps(AdvectionKind kind, double c, double h_t,
                                      double h_x) {
  const double flux = c / (8.0 * h_x);
  switch (kind) {
    case AdvectionKind::Veselov: {
      const double avg = 1.0 / (8.0 * h_t);
      return {{-1, avg - flux}, {0, 2.0 * avg}, {1, avg + flux}};
    }
    case AdvectionKind::SimplifiedImplicit:
      return {{-1, -flux}, {0, 1.0 / (2.0 * h_t)}, {1, flux}};
    case AdvectionKind::Leapfrog:
      break;
  }
  return {};
}

void require_kind(const AdvectionScheme& scheme, AdvectionKind kind,
                  const char* op) {
  if (scheme.kind() != kind) {
    throw Error(ErrorKind::InvalidParam,
                std::string(op) + " called on a " +
                    std::string(to_string(scheme.kind())) + " scheme");
  }
}

void require_on_grid(const AdvectionScheme& scheme, const Field1D& u,
                     const char* op) {
  if (!(u.grid() == scheme.grid())) {
    throw Error(ErrorKind::GridMismatch,
                std::string(op) + ": field is not on the scheme grid");
  }
}

}  // namespace

AdvectionScheme::AdvectionScheme(AdvectionKind kind, double c, double h_t,
                                 const PeriodicGrid1D& grid)
    : kind_(kind), c_(c), h_t_(h_t), grid_(grid) {
  if (!(h_t > 0.0) || !std::isfinite(h_t)) {
    throw Error(ErrorKind::InvalidParam, "advection: h_t must be positive");
  }
  if (!std::isfinite(c)) {
    throw Error(ErrorKind::InvalidParam, "advection: c must be finite");
  }
  if (grid.n < 2 || !(grid.h > 0.0)) {
    throw Error(ErrorKind::InvalidGrid, "advection: invalid grid");
  }
  if (kind == AdvectionKind::Veselov && grid.n % 2 == 0) {
    std::ostringstream msg;
    msg << "Veselov scheme needs an odd number of grid points (got " << grid.n
        << "): the Nyquist mode makes the implicit system singular";
    throw Error(ErrorKind::SingularSystem, msg.str());
  }
  if (kind != AdvectionKind::Leapfrog) {
    implicit_ = std::make_shared<const CirculantOperator>(
        grid.n, implicit_taps(kind, c, h_t, grid.h));
  }
}

Field1D AdvectionScheme::step(const Field1D& u_prev, const Field1D& u_curr) const {
  require_on_grid(*this, u_prev, "advection step");
  require_on_grid(*this, u_curr, "advection step");
  const std::size_t n = grid_.n;
  std::vector<double> out(n);

  if (kind_ == AdvectionKind::Leapfrog) {
    const double nu = c_ * h_t_ / grid_.h;
    for (std::size_t j = 0; j < n; ++j) {
      const auto jj = static_cast<std::ptrdiff_t>(j);
      out[j] = u_prev[j] - nu * (u_curr.at(jj + 1) - u_curr.at(jj - 1));
    }
    return Field1D(grid_, std::move(out));
  }

  // Everything not involving u_next moves to the right-hand side.
  const double flux = c_ / (8.0 * grid_.h);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const double explicit_flux =
        flux * ((u_prev.at(jj + 1) - u_prev.at(jj - 1)) +
                2.0 * (u_curr.at(jj + 1) - u_curr.at(jj - 1)));
    const double time_part =
        kind_ == AdvectionKind::Veselov
            ? (u_prev.at(jj - 1) + 2.0 * u_prev[j] + u_prev.at(jj + 1)) /
                  (8.0 * h_t_)
            : u_prev[j] / (2.0 * h_t_);
    out[j] = time_part - explicit_flux;
  }
  return Field1D(grid_, implicit_->solve(out));
}

std::vector<double> AdvectionScheme::residual(const Field1D& u_prev,
                                              const Field1D& u_curr,
                                              const Field1D& u_next) const {
  require_on_grid(*this, u_prev, "advection residual");
  require_on_grid(*this, u_curr, "advection residual");
  require_on_grid(*this, u_next, "advection residual");
  const std::size_t n = grid_.n;
  const double h_x = grid_.h;
  std::vector<double> r(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    auto dt = [&](std::ptrdiff_t m) { return u_next.at(m) - u_prev.at(m); };
    auto dx = [&](const Field1D& u) { return u.at(jj + 1) - u.at(jj - 1); };
    switch (kind_) {
      case AdvectionKind::Veselov:
        r[j] = 0.25 * (dt(jj - 1) + 2.0 * dt(jj) + dt(jj + 1)) / (2.0 * h_t_) +
               0.25 * c_ * (dx(u_prev) + 2.0 * dx(u_curr) + dx(u_next)) /
                   (2.0 * h_x);
        break;
      case AdvectionKind::Leapfrog:
        r[j] = dt(jj) / (2.0 * h_t_) + c_ * dx(u_curr) / (2.0 * h_x);
        break;
      case AdvectionKind::SimplifiedImplicit:
        r[j] = dt(jj) / (2.0 * h_t_) +
               0.25 * c_ * (dx(u_prev) + 2.0 * dx(u_curr) + dx(u_next)) /
                   (2.0 * h_x);
        break;
    }
  }
  return r;
}

double AdvectionScheme::residual_scale(const Field1D& u) const noexcept {
  const double m = u.max_abs();
  return m / h_t_ + std::abs(c_) * m / grid_.h;
}

Field1D step_veselov(const AdvectionScheme& scheme, const Field1D& u_prev,
                     const Field1D& u_curr) {
  require_kind(scheme, AdvectionKind::Veselov, "step_veselov");
  return scheme.step(u_prev, u_curr);
}

Field1D step_leapfrog(const AdvectionScheme& scheme, const Field1D& u_prev,
                      const Field1D& u_curr) {
  require_kind(scheme, AdvectionKind::Leapfrog, "step_leapfrog");
  return scheme.step(u_prev, u_curr);
}

Field1D step_simplified_implicit(const AdvectionScheme& scheme,
                                 const Field1D& u_prev, const Field1D& u_curr) {
  require_kind(scheme, AdvectionKind::SimplifiedImplicit,
               "step_simplified_implicit");
  return scheme.step(u_prev, u_curr);
}

Field1D bootstrap_second_level(const AdvectionScheme& scheme, const Field1D& u0,
                               Bootstrap method, const Profile1D* profile) {
  require_on_grid(scheme, u0, "bootstrap_second_level");
  const auto& grid = scheme.grid();
  const double shift = scheme.c() * scheme.h_t();

  if (method == Bootstrap::ExactShift) {
    if (profile == nullptr || !*profile) {
      throw Error(ErrorKind::UnsupportedBootstrap,
                  "exact-shift bootstrap needs the analytic initial profile");
    }
    return sample_field_1d(grid, [&](double x) {
      return (*profile)(grid.wrap_coordinate(x - shift));
    });
  }

  const double h_t = scheme.h_t();
  const double half_flux = scheme.c() / (4.0 * grid.h);
  const CirculantOperator system(
      grid.n, {{-1, -half_flux}, {0, 1.0 / h_t}, {1, half_flux}});
  std::vector<double> rhs(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    rhs[j] = u0[j] / h_t - half_flux * (u0.at(jj + 1) - u0.at(jj - 1));
  }
  return Field1D(grid, system.solve(rhs));
}

AdvectionRun run_advection(const AdvectionScheme& scheme, const Field1D& u0,
                           std::size_t n_t, Bootstrap method,
                           const Profile1D* profile,
                           const AdvectionRunOptions& options) {
  if (n_t < 2) {
    throw Error(ErrorKind::InvalidParam,
                "run_advection needs at least 2 time levels");
  }
  const double h_t = scheme.h_t();
  AdvectionRun run;
  if (options.record_spacetime) run.spacetime.emplace(scheme.grid(), h_t);

  auto emit = [&](std::size_t i, const Field1D& u) {
    if (run.spacetime) run.spacetime->append(u);
    if (options.on_level) options.on_level(i, static_cast<double>(i) * h_t, u);
  };

  Field1D prev = u0;
  Field1D curr = bootstrap_second_level(scheme, u0, method, profile);
  emit(0, prev);
  emit(1, curr);
  run.invariants.reserve(n_t - 1);
  run.invariants.push_back(
      invariants_1d(scheme.kind(), prev, curr, scheme.c(), h_t, 0.0));

  for (std::size_t i = 2; i < n_t; ++i) {
    Field1D next = scheme.step(prev, curr);
    emit(i, next);
    run.invariants.push_back(invariants_1d(scheme.kind(), curr, next, scheme.c(),
                                           h_t, static_cast<double>(i - 1) * h_t));
    prev = std::move(curr);
    curr = std::move(next);
  }
  run.last = std::move(curr);
  return run;
}

}  // namespace varpde
