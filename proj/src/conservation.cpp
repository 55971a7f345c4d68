#include "varpde/conservation.hpp"

#include <algorithm>
#include <cmath>

#include "varpde/errors.hpp"

namespace varpde {

std::string_view to_string(AdvectionKind kind) noexcept {
  switch (kind) {
    case AdvectionKind::Veselov: return "veselov";
    case AdvectionKind::Leapfrog: return "leapfrog";
    case AdvectionKind::SimplifiedImplicit: return "simplified";
  }
  return "unknown";
}

std::optional<AdvectionKind> parse_advection_kind(std::string_view name) noexcept {
  if (name == "veselov" || name == "midpoint") return AdvectionKind::Veselov;
  if (name == "leapfrog" || name == "trapezoidal") return AdvectionKind::Leapfrog;
  if (name == "simplified" || name == "simplified-implicit") {
    return AdvectionKind::SimplifiedImplicit;
  }
  return std::nullopt;
}

double mass_1d(const Field1D& u_i, const Field1D& u_next) {
  require_same_grid(u_i, u_next, "mass_1d");
  const std::size_t n = u_i.size();
  std::vector<double> cells(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    cells[j] = u_i.at(jj) + u_i.at(jj + 1) + u_next.at(jj + 1) + u_next.at(jj);
  }
  return 0.25 * u_i.grid().h * pairwise_sum(cells);
}

double l2_charge_midpoint(const Field1D& u_i, const Field1D& u_next, double c,
                          double h_t) {
  require_same_grid(u_i, u_next, "l2_charge_midpoint");
  const double h_x = u_i.grid().h;
  const std::size_t n = u_i.size();
  std::vector<double> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const double average =
        0.25 * (u_next.at(jj - 1) + 2.0 * u_next.at(jj) + u_next.at(jj + 1));
    const double flux = 0.5 * c * h_t * (u_next.at(jj + 1) - u_next.at(jj - 1)) /
                        (2.0 * h_x);
    terms[j] = u_i[j] * (average + flux);
  }
  return h_x * pairwise_sum(terms);
}

double l2_charge_trapezoidal(const Field1D& u_i, const Field1D& u_next) {
  require_same_grid(u_i, u_next, "l2_charge_trapezoidal");
  const std::size_t n = u_i.size();
  std::vector<double> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    terms[j] = u_i.at(jj + 1) * u_next.at(jj + 1) + u_i.at(jj) * u_next.at(jj);
  }
  return 0.5 * u_i.grid().h * pairwise_sum(terms);
}

double l2_charge_mixed(const Field1D& u_i, const Field1D& u_next, double c,
                       double h_t) {
  require_same_grid(u_i, u_next, "l2_charge_mixed");
  const double h_x = u_i.grid().h;
  const std::size_t n = u_i.size();
  std::vector<double> terms(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const double flux = 0.5 * c * h_t * (u_next.at(jj + 1) - u_next.at(jj - 1)) /
                        (2.0 * h_x);
    terms[j] = u_i[j] * (u_next[j] + flux);
  }
  return h_x * pairwise_sum(terms);
}

double l2_charge(AdvectionKind kind, const Field1D& u_i, const Field1D& u_next,
                 double c, double h_t) {
  switch (kind) {
    case AdvectionKind::Veselov: return l2_charge_midpoint(u_i, u_next, c, h_t);
    case AdvectionKind::SimplifiedImplicit: return l2_charge_mixed(u_i, u_next, c, h_t);
    case AdvectionKind::Leapfrog: break;
  }
  return l2_charge_trapezoidal(u_i, u_next);
}

Charges2D charges_2d(const Field2D& omega, const Field2D& psi) {
  require_same_grid(omega, psi, "charges_2d");
  const auto w = omega.values();
  const auto p = psi.values();
  std::vector<double> squares(w.size());
  std::vector<double> products(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    squares[i] = w[i] * w[i];
    products[i] = w[i] * p[i];
  }
  const double area = omega.grid().cell_area();
  return Charges2D{area * pairwise_sum(w), area * pairwise_sum(squares),
                   0.5 * area * pairwise_sum(products)};
}

Generator1D Generator1D::mass() {
  return {"mass", [](double) { return 1.0; }, [](double) { return 0.0; }};
}

Generator1D Generator1D::l2_norm() {
  return {"l2", [](double u) { return u; }, [](double v) { return -v; }};
}

double symmetry_residual_1d(AdvectionKind kind, const CellValues& cell,
                            const Generator1D& generator, double c, double h_t,
                            double h_x) {
  const auto& u = cell.u;
  const auto& v = cell.v;
  std::array<double, 4> eta{};
  std::array<double, 4> eta_t{};
  for (std::size_t l = 0; l < 4; ++l) {
    eta[l] = generator.eta(u[l]);
    eta_t[l] = generator.eta_tilde(v[l]);
  }
  // corners: 0 = (i,j), 1 = (i,j+1), 2 = (i+1,j+1), 3 = (i+1,j)
  const double d_eta_t = (eta[3] - eta[0]) / h_t + (eta[2] - eta[1]) / h_t;
  const double d_eta_x = (eta[1] - eta[0]) / h_x + (eta[2] - eta[3]) / h_x;
  const double d_u_t = (u[3] - u[0]) / h_t + (u[2] - u[1]) / h_t;
  const double d_u_x = (u[1] - u[0]) / h_x + (u[2] - u[3]) / h_x;
  const double v_sum = v[0] + v[1] + v[2] + v[3];
  const double eta_t_sum = eta_t[0] + eta_t[1] + eta_t[2] + eta_t[3];

  double time_part = 0.0;
  double space_part = 0.0;
  switch (kind) {
    case AdvectionKind::Veselov:
      time_part = v_sum * d_eta_t / 8.0 + eta_t_sum * d_u_t / 8.0;
      space_part = c * v_sum * d_eta_x / 8.0 + c * eta_t_sum * d_u_x / 8.0;
      break;
    case AdvectionKind::Leapfrog:
      time_part = 0.5 * (0.5 * (v[0] + v[3]) * (eta[3] - eta[0]) / h_t +
                         0.5 * (v[1] + v[2]) * (eta[2] - eta[1]) / h_t) +
                  0.5 * (0.5 * (eta_t[0] + eta_t[3]) * (u[3] - u[0]) / h_t +
                         0.5 * (eta_t[1] + eta_t[2]) * (u[2] - u[1]) / h_t);
      space_part =
          0.5 * c * (0.5 * (v[0] + v[1]) * (eta[1] - eta[0]) / h_x +
                     0.5 * (v[2] + v[3]) * (eta[2] - eta[3]) / h_x) +
          0.5 * c * (0.5 * (eta_t[0] + eta_t[1]) * (u[1] - u[0]) / h_x +
                     0.5 * (eta_t[2] + eta_t[3]) * (u[2] - u[3]) / h_x);
      break;
    case AdvectionKind::SimplifiedImplicit:
      time_part = 0.5 * (0.5 * (v[0] + v[3]) * (eta[3] - eta[0]) / h_t +
                         0.5 * (v[1] + v[2]) * (eta[2] - eta[1]) / h_t) +
                  0.5 * (0.5 * (eta_t[0] + eta_t[3]) * (u[3] - u[0]) / h_t +
                         0.5 * (eta_t[1] + eta_t[2]) * (u[2] - u[1]) / h_t);
      space_part = c * v_sum * d_eta_x / 8.0 + c * eta_t_sum * d_u_x / 8.0;
      break;
  }
  return h_t * h_x * (time_part + space_part);
}

InvariantRecord1D invariants_1d(AdvectionKind kind, const Field1D& u_i,
                                const Field1D& u_next, double c, double h_t,
                                double t) {
  const double m = mass_1d(u_i, u_next);
  return InvariantRecord1D{t, m, l2_charge(kind, u_i, u_next, c, h_t), c * m,
                           0.5 * c * c * m};
}

InvariantRecord2D invariants_2d(const Field2D& omega, const Field2D& psi,
                                double t) {
  const auto q = charges_2d(omega, psi);
  return InvariantRecord2D{t, q.circulation, q.enstrophy, q.energy};
}

double relative_drift(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const double v0 = values.front();
  const double scale = std::max(1.0, std::abs(v0));
  double worst = 0.0;
  for (double v : values) worst = std::max(worst, std::abs(v - v0));
  return worst / scale;
}

}  // namespace varpde
