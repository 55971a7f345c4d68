#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "varpde/errors.hpp"
#include "varpde/initial_conditions.hpp"
#include "varpde/vorticity.hpp"

using namespace varpde;
constexpr double pi = std::numbers::pi;

namespace {

oracle::Vec vec(const Field2D& f) { return {f.values().begin(), f.values().end()}; }

Field2D smooth_random(const PeriodicGrid2D& g, oracle::Rng& rng, double amplitude) {
  const double a = rng.uniform(-1, 1), b = rng.uniform(-1, 1), c = rng.uniform(-1, 1);
  const double phase = rng.uniform(0, 2 * pi);
  auto f = sample_field_2d(g, [&](double x, double y) {
    return amplitude * (a * std::sin(2 * pi * x + phase) + b * std::cos(2 * pi * y) +
                        c * std::sin(2 * pi * (x + 2 * y)));
  });
  auto v = vec(f);
  for (auto& x : v) x += 0.1 * amplitude * rng.uniform(-1, 1);
  return Field2D(g, v);
}

}  // namespace

TEST_CASE("nonlinear step matches the dense Newton oracle on 8x8") {
  oracle::Rng rng(77);
  const auto g = make_grid_2d(8, 0, 1, 8, 0, 1);
  PicardConfig cfg;
  cfg.tolerance = 1e-13;
  for (int trial = 0; trial < 4; ++trial) {
    const auto state = make_vorticity_state(smooth_random(g, rng, 5.0));
    const double ht = 1e-2;
    const auto next = vorticity_step(state, ht, cfg);
    const auto ref = oracle::vorticity_step(vec(state.omega), vec(state.psi), 8, 8,
                                            g.hx(), g.hy(), ht);
    CHECK(oracle::sup_diff(vec(next.omega), ref.omega) <= 1e-8);
    CHECK(oracle::sup_diff(vec(next.psi), ref.psi) <= 1e-8);
    CHECK(next.t == Catch::Approx(ht));
  }
}

TEST_CASE("linear step matches the dense oracle on 8x8") {
  oracle::Rng rng(78);
  const auto g = make_grid_2d(8, -2 * pi, 2 * pi, 8, -2 * pi, 2 * pi);
  const auto ic = initial_condition_2d(InitialCondition::SeparatrixLinear, g,
                                       default_ic_params(InitialCondition::SeparatrixLinear));
  const VorticityIntegrator integ(g, PicardConfig{});
  for (int trial = 0; trial < 3; ++trial) {
    const Field2D w(g, rng.uniform_vector(g.size(), -1, 1));
    const auto next = integ.linear_step(*ic.psi_fixed, w, 0.05);
    const auto ref = oracle::linear_vorticity_step(vec(*ic.psi_fixed), vec(w), 8, 8,
                                                   g.hx(), g.hy(), 0.05);
    CHECK(oracle::sup_diff(vec(next), ref) <= 1e-8);
  }
}

TEST_CASE("one-step solutions satisfy the one-step and two-step equations") {
  const auto g = make_grid_2d(32, -1, 1, 32, -1, 1);
  const auto ic = initial_condition_2d(InitialCondition::LambDipole, g,
                                       default_ic_params(InitialCondition::LambDipole));
  PicardConfig cfg;
  cfg.tolerance = 1e-12;
  const VorticityIntegrator integ(g, cfg);
  const double ht = 1e-2;
  auto s0 = make_vorticity_state(ic.omega);
  StepReport report;
  auto s1 = integ.step(s0, ht, &report);
  CHECK(report.last_update <= cfg.tolerance);
  CHECK(report.picard_iterations >= 1);
  auto s2 = integ.step(s1, ht);

  const auto r1 = one_step_residual(s0, s1.omega, s1.psi, ht);
  CHECK(r1.max_abs() <= 10 * cfg.tolerance);

  const auto [vort, pois] =
      multistep_residual(s0.omega, s1.omega, s2.omega, s0.psi, s1.psi, s2.psi, ht);
  CHECK(vort.max_abs() <= 10 * cfg.tolerance);
  CHECK(pois.max_abs() <= 10 * cfg.tolerance);
}

TEST_CASE("circulation, enstrophy and energy are conserved") {
  oracle::Rng rng(5);
  const auto g = make_grid_2d(16, 0, 1, 12, 0, 1);
  PicardConfig cfg;
  cfg.tolerance = 1e-12;
  const auto run = run_vorticity(smooth_random(g, rng, 10.0), 2e-2, 30, cfg, 10);
  CHECK(run.invariants.size() == 31);
  CHECK(run.snapshots.size() == 4);
  CHECK(relative_drift(column(run.invariants, &InvariantRecord2D::circulation)) < 1e-11);
  CHECK(relative_drift(column(run.invariants, &InvariantRecord2D::enstrophy)) < 1e-10);
  CHECK(relative_drift(column(run.invariants, &InvariantRecord2D::energy)) < 1e-10);
}

TEST_CASE("linear runs conserve circulation and enstrophy") {
  const auto g = make_grid_2d(24, -2 * pi, 2 * pi, 24, -2 * pi, 2 * pi);
  const auto ic = initial_condition_2d(InitialCondition::SeparatrixLinear, g,
                                       default_ic_params(InitialCondition::SeparatrixLinear));
  const auto run =
      run_linear_vorticity(*ic.psi_fixed, ic.omega, 1e-2, 50, PicardConfig{}, 50);
  CHECK(relative_drift(column(run.invariants, &InvariantRecord2D::circulation)) < 1e-12);
  CHECK(relative_drift(column(run.invariants, &InvariantRecord2D::enstrophy)) < 1e-11);
}

TEST_CASE("trivial vorticity cases") {
  const auto g = make_grid_2d(12, 0, 1, 12, 0, 1);
  const VorticityIntegrator integ(g, PicardConfig{});

  // zero stays zero
  const auto zero = Field2D::zeros(g);
  const auto run = run_linear_vorticity(zero, zero, 0.1, 5, PicardConfig{}, 1);
  for (const auto& s : run.snapshots) CHECK(s.omega.max_abs() == 0.0);

  // constant psi freezes omega
  oracle::Rng rng(3);
  const Field2D w(g, rng.uniform_vector(g.size(), -1, 1));
  const Field2D flat(g, std::vector<double>(g.size(), 3.0));
  const auto frozen = integ.linear_step(flat, w, 0.1);
  CHECK(oracle::sup_diff(vec(frozen), vec(w)) < 1e-14);

  // n_t = 0 keeps only the initial state
  const auto none = run_vorticity(w, 0.1, 0, PicardConfig{}, 3);
  CHECK(none.snapshots.size() == 1);
  CHECK(none.invariants.size() == 1);

  // Laplacian eigenfunction is steady: A(psi, lambda psi) = 0
  const auto eigen = sample_field_2d(
      g, [](double x, double y) { return std::sin(2 * pi * x) + std::cos(2 * pi * y); });
  const auto steady = run_vorticity(eigen, 0.05, 10, PicardConfig{}, 5);
  for (const auto& s : steady.snapshots) {
    CHECK(oracle::sup_diff(vec(s.omega), vec(eigen)) < 1e-10);
  }
}

TEST_CASE("Picard failure is reported") {
  const auto g = make_grid_2d(16, -1, 1, 16, -1, 1);
  const auto ic = initial_condition_2d(InitialCondition::LambDipole, g,
                                       default_ic_params(InitialCondition::LambDipole));
  PicardConfig cfg;
  cfg.tolerance = 1e-14;
  cfg.max_iterations = 1;
  try {
    vorticity_step(make_vorticity_state(ic.omega), 1e-2, cfg);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.kind() == ErrorKind::NonConvergence);
    CHECK(e.iterations() == 1);
    CHECK(e.last_residual() > cfg.tolerance);
  }
  PicardConfig bad;
  bad.tolerance = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("vorticity inputs must share the grid") {
  const auto g = make_grid_2d(8, 0, 1, 8, 0, 1);
  const auto h = make_grid_2d(8, 0, 2, 8, 0, 1);
  const VorticityIntegrator integ(g, PicardConfig{});
  const VorticityState s{Field2D::zeros(h), Field2D::zeros(h), 0.0};
  try {
    integ.step(s, 0.1);
    FAIL("expected GridMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GridMismatch);
  }
}
