#pragma once

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "varpde/grid.hpp"
#include "varpde/scheme_kind.hpp"

namespace varpde {

// Discrete Noether charges. One-dimensional charges are functions of two
// consecutive time levels (u_i, u_{i+1}); the vorticity charges need a
// single level.

/// (h_x/4) sum_j [u_{i,j} + u_{i,j+1} + u_{i+1,j+1} + u_{i+1,j}]
double mass_1d(const Field1D& u_i, const Field1D& u_next);

/// Restricted L2 charge of the midpoint (Veselov) scheme. Carries an
/// O(h_t) correction coupling to the spatial flux.
double l2_charge_midpoint(const Field1D& u_i, const Field1D& u_next, double c,
                          double h_t);

/// (h_x/2) sum_j [u_{i,j+1} u_{i+1,j+1} + u_{i,j} u_{i+1,j}], the leapfrog
/// charge.
double l2_charge_trapezoidal(const Field1D& u_i, const Field1D& u_next);

/// h_x sum_j u_{i,j} [u_{i+1,j} + (c h_t/2)(u_{i+1,j+1} - u_{i+1,j-1})/(2 h_x)],
/// the quadratic charge of the simplified implicit scheme. The trapezoidal
/// charge is only conserved by it up to O(h_t^2) oscillations.
double l2_charge_mixed(const Field1D& u_i, const Field1D& u_next, double c,
                       double h_t);

/// The L2 charge matched to a scheme's discrete Lagrangian.
double l2_charge(AdvectionKind kind, const Field1D& u_i, const Field1D& u_next,
                 double c, double h_t);

struct Charges2D {
  double circulation;
  double enstrophy;
  double energy;
};

/// circulation = hx hy sum w, enstrophy = hx hy sum w^2,
/// energy = (hx hy / 2) sum w psi
Charges2D charges_2d(const Field2D& omega, const Field2D& psi);

/// Discrete symmetry generator for the formal advection Lagrangian: eta acts
/// on the physical field u, eta_tilde on the adjoint field v.
struct Generator1D {
  std::string name;
  std::function<double(double)> eta;
  std::function<double(double)> eta_tilde;

  static Generator1D mass();     // eta = 1, eta_tilde = 0
  static Generator1D l2_norm();  // eta = u, eta_tilde = -v
};

/// Field values on the four corners of one space-time cell, ordered
/// (i, j), (i, j+1), (i+1, j+1), (i+1, j) with i the time index.
struct CellValues {
  std::array<double, 4> u;
  std::array<double, 4> v;
};

/// Evaluates the discrete symmetry condition
///   sum_l dL_d/du_l * eta(u_l) + dL_d/dv_l * eta_tilde(v_l)
/// of the scheme's discrete Lagrangian on a single cell. Zero for every
/// symmetry of the discrete Lagrangian.
double symmetry_residual_1d(AdvectionKind kind, const CellValues& cell,
                            const Generator1D& generator, double c, double h_t,
                            double h_x);

struct InvariantRecord1D {
  double t;
  double mass;
  double l2;
  double momentum;
  double energy;
};

struct InvariantRecord2D {
  double t;
  double circulation;
  double enstrophy;
  double energy;
};

using InvariantSeries1D = std::vector<InvariantRecord1D>;
using InvariantSeries2D = std::vector<InvariantRecord2D>;

/// Charges of the level pair (u_i, u_{i+1}) reported at t_i. Momentum and
/// energy are c * mass and c^2 / 2 * mass.
InvariantRecord1D invariants_1d(AdvectionKind kind, const Field1D& u_i,
                                const Field1D& u_next, double c, double h_t,
                                double t);

InvariantRecord2D invariants_2d(const Field2D& omega, const Field2D& psi,
                                double t);

/// max_i |v_i - v_0| / max(1, |v_0|); zero for an empty series.
double relative_drift(std::span<const double> values);

template <typename Record>
std::vector<double> column(const std::vector<Record>& series,
                           double Record::*member) {
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& r : series) out.push_back(r.*member);
  return out;
}

}  // namespace varpde
