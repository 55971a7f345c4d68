// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "varpde/advection.hpp"
#include "varpde/arakawa.hpp"
#include "varpde/conservation.hpp"
#include "varpde/dispersion.hpp"
#include "varpde/errors.hpp"
#include "varpde/initial_conditions.hpp"
#include "varpde/vorticity.hpp"

using namespace varpde;

namespace {

constexpr double pi = std::numbers::pi;
constexpr AdvectionKind kKinds[] = {AdvectionKind::Veselov, AdvectionKind::Leapfrog,
                                    AdvectionKind::SimplifiedImplicit};

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [fail]");
  }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, const char* s, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, s, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

oracle::Vec vec(const Field1D& f) { return {f.values().begin(), f.values().end()}; }
oracle::Vec vec(const Field2D& f) { return {f.values().begin(), f.values().end()}; }

// Reference advection run: n_x = 255 on [-0.5, 0.5), c = 1, h_t = 2.5e-3.
struct ReferenceRun {
  PeriodicGrid1D grid = make_grid_1d(255, -0.5, 0.5);
  double c = 1.0;
  double ht = 2.5e-3;
  std::size_t nt = 4000;
};

Outcome criterion_1() {
  Outcome out;
  const ReferenceRun ref;
  const auto ic = initial_condition_1d(InitialCondition::Gaussian, ref.grid,
                                       default_ic_params(InitialCondition::Gaussian));
  for (auto kind : kKinds) {
    const AdvectionScheme scheme(kind, ref.c, ref.ht, ref.grid);
    // trapezoidal charge alongside, for information only
    std::vector<double> trap;
    Field1D prev;
    AdvectionRunOptions opt;
    opt.on_level = [&](std::size_t level, double, const Field1D& u) {
      if (level > 0) trap.push_back(l2_charge_trapezoidal(prev, u));
      prev = u;
    };
    const auto start = std::chrono::steady_clock::now();
    const auto run =
        run_advection(scheme, ic.field, ref.nt, Bootstrap::ExactShift, &ic.profile, opt);
    const double elapsed = seconds_since(start);
    const double mass = relative_drift(column(run.invariants, &InvariantRecord1D::mass));
    const double l2 = relative_drift(column(run.invariants, &InvariantRecord1D::l2));
    const std::string name(to_string(kind));
    out.require(mass <= 1e-8, fmt("%s mass %.2e", name.c_str(), mass));
    out.require(l2 <= 1e-8, fmt("%s l2 %.2e", name.c_str(), l2));
    out.require(elapsed < 30, fmt("%s %.2fs", name.c_str(), elapsed));
    if (kind == AdvectionKind::SimplifiedImplicit) {
      out.detail += fmt("; (info) %s trapezoidal l2 %.2e", name.c_str(), relative_drift(trap));
    }
  }
  return out;
}

Outcome criterion_2() {
  Outcome out;
  const auto xs = xi_grid(2001);
  for (auto kind : kKinds) {
    for (double nu : {0.75, 1.25}) {
      const auto curve = solve_dispersion(kind, nu, xs);
      double worst = 0.0;
      std::size_t emitted = 0;
      bool no_root_ok = true;
      for (const auto& s : curve.samples) {
        if (s.tau) {
          ++emitted;
          worst = std::max(worst, std::abs(dispersion_residual(kind, *s.tau, s.xi, nu)));
        }
        if (kind == AdvectionKind::Leapfrog) {
          const bool beyond = std::abs(nu * std::sin(s.xi)) > 1.0;
          no_root_ok = no_root_ok && (beyond == !s.tau.has_value());
        } else {
          no_root_ok = no_root_ok && s.tau.has_value();
        }
      }
      const std::string name = std::string(to_string(kind)) + fmt(" nu=%.2f", nu);
      out.require(worst <= 1e-10 && emitted > 0,
                  fmt("%s max residual %.1e", name.c_str(), worst));
      out.require(no_root_ok, name + " root set");
    }
  }
  return out;
}

Outcome criterion_3() {
  Outcome out;
  const ReferenceRun ref;
  const auto ic = initial_condition_1d(InitialCondition::CosineSum, ref.grid, {});
  const double dxi = 2 * pi / 255;
  const double dtau = 2 * pi / 4000;
  for (auto kind : kKinds) {
    const AdvectionScheme scheme(kind, ref.c, ref.ht, ref.grid);
    AdvectionRunOptions opt;
    opt.record_spacetime = true;
    const auto run =
        run_advection(scheme, ic.field, ref.nt, Bootstrap::ExactShift, &ic.profile, opt);
    const auto peaks = experimental_dispersion(*run.spacetime);
    const double nu = scheme.courant();
    std::size_t hits = 0;
    for (const auto& p : peaks) {
      double best = INFINITY;
      for (int s = -50; s <= 50; ++s) {
        const double xi = p.xi + dxi * s / 50.0;
        best = std::min(best, distance_to_branches(kind, nu, xi, p.tau));
      }
      hits += best <= dtau;
    }
    const double frac = peaks.empty() ? 0.0 : static_cast<double>(hits) / peaks.size();
    const std::string name(to_string(kind));
    out.require(frac >= 0.95, fmt("%s %.4f of peaks on a branch", name.c_str(), frac) +
                                  " (" + std::to_string(peaks.size()) + " peaks)");
  }
  return out;
}

Outcome criterion_4() {
  Outcome out;
  oracle::Rng rng(4);
  double worst = 0.0;
  for (auto [nx, ny] : {std::pair{8, 8}, std::pair{9, 7}}) {
    const auto g = make_grid_2d(nx, 0, 1, ny, 0, 2);
    for (int trial = 0; trial < 16; ++trial) {
      const Field2D psi(g, rng.uniform_vector(g.size(), -1, 1));
      const Field2D w(g, rng.uniform_vector(g.size(), -1, 1));
      const auto a = arakawa(psi, w);
      double s = 0, sw = 0, sp = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        s += a.values()[i];
        sw += w.values()[i] * a.values()[i];
        sp += psi.values()[i] * a.values()[i];
      }
      const double scale =
          g.size() * psi.max_abs() * w.max_abs() / (g.hx() * g.hy());
      worst = std::max({worst, std::abs(s) / scale, std::abs(sw) / scale,
                        std::abs(sp) / scale});
    }
  }
  out.require(worst <= 1e-12, fmt("max scaled sum %.2e", worst));
  return out;
}

Outcome criterion_5() {
  Outcome out;
  const auto g = make_grid_2d(64, -1, 1, 64, -1, 1);
  const auto ic = initial_condition_2d(InitialCondition::LambDipole, g,
                                       default_ic_params(InitialCondition::LambDipole));
  PicardConfig cfg;
  cfg.tolerance = 1e-12;
  const auto start = std::chrono::steady_clock::now();
  const auto run = run_vorticity(ic.omega, 1e-2, 100, cfg, 10);
  const double elapsed = seconds_since(start);
  const double circ = relative_drift(column(run.invariants, &InvariantRecord2D::circulation));
  const double ens = relative_drift(column(run.invariants, &InvariantRecord2D::enstrophy));
  const double en = relative_drift(column(run.invariants, &InvariantRecord2D::energy));
  out.require(circ <= 1e-9, fmt("circulation %.2e", circ));
  out.require(ens <= 1e-9, fmt("enstrophy %.2e", ens));
  out.require(en <= 1e-9, fmt("energy %.2e", en));
  out.require(elapsed < 120, fmt("%.2fs", elapsed));
  return out;
}

Outcome criterion_6() {
  Outcome out;
  const auto g = make_grid_2d(64, -1, 1, 64, -1, 1);
  const auto ic = initial_condition_2d(InitialCondition::LambDipole, g,
                                       default_ic_params(InitialCondition::LambDipole));
  PicardConfig cfg;
  cfg.tolerance = 1e-12;
  const double ht = 1e-2;
  std::vector<VorticityState> states{make_vorticity_state(ic.omega)};
  for (int i = 0; i < 6; ++i) states.push_back(vorticity_step(states.back(), ht, cfg));
  double worst_w = 0.0, worst_p = 0.0;
  for (std::size_t i = 1; i + 1 < states.size(); ++i) {
    const auto [rw, rp] =
        multistep_residual(states[i - 1].omega, states[i].omega, states[i + 1].omega,
                           states[i - 1].psi, states[i].psi, states[i + 1].psi, ht);
    worst_w = std::max(worst_w, rw.max_abs());
    worst_p = std::max(worst_p, rp.max_abs());
  }
  out.require(worst_w <= 10 * cfg.tolerance, fmt("vorticity residual %.2e", worst_w));
  out.require(worst_p <= 10 * cfg.tolerance, fmt("poisson residual %.2e", worst_p));
  return out;
}

Outcome criterion_7() {
  Outcome out;
  oracle::Rng rng(7);
  for (auto kind : {AdvectionKind::Veselov, AdvectionKind::SimplifiedImplicit}) {
    double worst = 0.0;
    for (int n : {7, 31, 63}) {
      const auto g = make_grid_1d(n, -0.5, 0.5);
      for (double c : {1.0, -0.7}) {
        const Field1D a(g, rng.uniform_vector(n, -1, 1));
        const Field1D b(g, rng.uniform_vector(n, -1, 1));
        const AdvectionScheme scheme(kind, c, 2.5e-3, g);
        const auto next = scheme.step(a, b);
        const auto ref = oracle::advection_step(kind, c, 2.5e-3, g.h, vec(a), vec(b));
        worst = std::max(worst, oracle::sup_diff(vec(next), ref));
      }
    }
    out.require(worst <= 1e-8, fmt("%s %.2e", std::string(to_string(kind)).c_str(), worst));
  }

  {
    const auto g = make_grid_2d(8, -2 * pi, 2 * pi, 8, -2 * pi, 2 * pi);
    const auto ic = initial_condition_2d(InitialCondition::SeparatrixLinear, g,
                                         default_ic_params(InitialCondition::SeparatrixLinear));
    const VorticityIntegrator integ(g, PicardConfig{});
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const Field2D w(g, rng.uniform_vector(g.size(), -1, 1));
      const auto next = integ.linear_step(*ic.psi_fixed, w, 0.05);
      const auto ref =
          oracle::linear_vorticity_step(vec(*ic.psi_fixed), vec(w), 8, 8, g.hx(), g.hy(), 0.05);
      worst = std::max(worst, oracle::sup_diff(vec(next), ref));
    }
    out.require(worst <= 1e-8, fmt("linear vorticity %.2e", worst));
  }

  {
    const auto g = make_grid_2d(8, 0, 1, 8, 0, 1);
    PicardConfig cfg;
    cfg.tolerance = 1e-13;
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1);
      auto w = sample_field_2d(g, [&](double x, double y) {
        return 5 * (a * std::sin(2 * pi * x) + b * std::cos(2 * pi * (x + y)));
      });
      auto v = vec(w);
      for (auto& x : v) x += 0.5 * rng.uniform(-1, 1);
      const auto state = make_vorticity_state(Field2D(g, v));
      const auto next = vorticity_step(state, 1e-2, cfg);
      const auto ref =
          oracle::vorticity_step(vec(state.omega), vec(state.psi), 8, 8, g.hx(), g.hy(), 1e-2);
      worst = std::max({worst, oracle::sup_diff(vec(next.omega), ref.omega),
                        oracle::sup_diff(vec(next.psi), ref.psi)});
    }
    out.require(worst <= 1e-8, fmt("nonlinear vorticity 8x8 %.2e", worst));
  }
  return out;
}

Outcome criterion_8() {
  Outcome out;
  oracle::Rng rng(8);
  const Generator1D control{"u^2", [](double u) { return u * u; }, [](double) { return 0.0; }};
  for (auto kind : kKinds) {
    double worst = 0.0;
    for (int cell_no = 0; cell_no < 1000; ++cell_no) {
      CellValues cell;
      for (auto& x : cell.u) x = rng.uniform(-2, 2);
      for (auto& x : cell.v) x = rng.uniform(-2, 2);
      const double c = rng.uniform(-2, 2);
      const double ht = rng.uniform(1e-3, 1e-1);
      const double hx = rng.uniform(1e-3, 1e-1);
      const double scale = hx + std::abs(c) * ht;
      for (const auto& gen : {Generator1D::mass(), Generator1D::l2_norm()}) {
        worst = std::max(worst,
                         std::abs(symmetry_residual_1d(kind, cell, gen, c, ht, hx)) / scale);
      }
    }
    // the control only has to be nonzero on generic cells
    double control_any = 0.0;
    oracle::Rng probe(80);
    for (int i = 0; i < 10; ++i) {
      CellValues cell;
      for (auto& x : cell.u) x = probe.uniform(-2, 2);
      for (auto& x : cell.v) x = probe.uniform(-2, 2);
      control_any = std::max(control_any,
                             std::abs(symmetry_residual_1d(kind, cell, control, 1.0, 0.01, 0.02)) /
                                 0.03);
    }
    const std::string name(to_string(kind));
    out.require(worst <= 1e-13, fmt("%s max scaled residual %.1e", name.c_str(), worst));
    out.require(control_any > 1e-3, fmt("%s u^2 control %.2e", name.c_str(), control_any));
  }
  return out;
}

Outcome criterion_9() {
  Outcome out;
  for (int n : {64, 256}) {
    bool singular = false;
    try {
      AdvectionScheme(AdvectionKind::Veselov, 1.0, 2.5e-3, make_grid_1d(n, -0.5, 0.5));
    } catch (const Error& e) {
      singular = e.kind() == ErrorKind::SingularSystem;
    }
    out.require(singular, "n=" + std::to_string(n) + " rejected as singular");
  }
  bool odd_ok = true;
  try {
    AdvectionScheme(AdvectionKind::Veselov, 1.0, 2.5e-3, make_grid_1d(255, -0.5, 0.5));
  } catch (const Error&) {
    odd_ok = false;
  }
  out.require(odd_ok, "n=255 accepted");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("criterion %zu: %s %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
