#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "varpde/arakawa.hpp"

using namespace varpde;
constexpr double pi = std::numbers::pi;

namespace {

oracle::Vec vec(const Field2D& f) { return {f.values().begin(), f.values().end()}; }

double dot(const oracle::Vec& a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("bracket matches the literal three-term transcription") {
  oracle::Rng rng(17);
  for (auto [nx, ny] : {std::pair{8, 8}, std::pair{9, 7}, std::pair{5, 12}}) {
    const auto g = make_grid_2d(nx, 0, 1, ny, -1, 2);
    for (int trial = 0; trial < 4; ++trial) {
      const Field2D psi(g, rng.uniform_vector(g.size(), -1, 1));
      const Field2D w(g, rng.uniform_vector(g.size(), -1, 1));
      const auto a = vec(arakawa(psi, w));
      const auto ref = oracle::arakawa(vec(psi), vec(w), nx, ny, g.hx(), g.hy());
      CHECK(oracle::sup_diff(a, ref) <= 1e-12 * oracle::sup_norm(ref));
    }
  }
}

TEST_CASE("discrete identities on random fields") {
  oracle::Rng rng(99);
  for (auto [nx, ny] : {std::pair{8, 8}, std::pair{9, 7}}) {
    const auto g = make_grid_2d(nx, 0, 1, ny, 0, 1.3);
    for (int trial = 0; trial < 16; ++trial) {
      const Field2D psi(g, rng.uniform_vector(g.size(), -1, 1));
      const Field2D w(g, rng.uniform_vector(g.size(), -1, 1));
      const auto a = vec(arakawa(psi, w));
      const double bound = 1e-12 * g.size() * psi.max_abs() * w.max_abs() / g.cell_area();
      double sum = 0;
      for (double v : a) sum += v;
      CHECK(std::abs(sum) <= bound);
      CHECK(std::abs(dot(a, w.values())) <= bound);
      CHECK(std::abs(dot(a, psi.values())) <= bound);

      // antisymmetry and A(f, f) = 0
      const auto b = vec(arakawa(w, psi));
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] + b[i]) <= bound);
      const auto self = arakawa(w, w);
      for (double v : self.values()) CHECK(std::abs(v) <= bound);

      // each component conserves the total on its own
      for (const auto& comp : {arakawa_pp(psi, w), arakawa_px(psi, w), arakawa_xp(psi, w)}) {
        double s = 0;
        for (double v : comp.values()) s += v;
        CHECK(std::abs(s) <= bound);
      }
    }
  }
}

TEST_CASE("bracket is a second order Jacobian") {
  auto error_at = [](std::ptrdiff_t n) {
    const auto g = make_grid_2d(n, 0, 1, n, 0, 1);
    const auto psi = sample_field_2d(g, [](double x, double y) {
      return std::sin(2 * pi * x) * std::cos(2 * pi * y);
    });
    const auto w = sample_field_2d(g, [](double x, double y) {
      return std::cos(2 * pi * x) + std::sin(4 * pi * y);
    });
    // psi_x w_y - psi_y w_x
    const auto exact = sample_field_2d(g, [](double x, double y) {
      const double px = 2 * pi * std::cos(2 * pi * x) * std::cos(2 * pi * y);
      const double py = -2 * pi * std::sin(2 * pi * x) * std::sin(2 * pi * y);
      const double wx = -2 * pi * std::sin(2 * pi * x);
      const double wy = 4 * pi * std::cos(4 * pi * y);
      return px * wy - py * wx;
    });
    double err = 0;
    for (const auto& f : {arakawa(psi, w), arakawa_pp(psi, w), arakawa_px(psi, w),
                          arakawa_xp(psi, w)}) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        err = std::max(err, std::abs(f.values()[i] - exact.values()[i]));
      }
    }
    return err;
  };
  const double e1 = error_at(32);
  const double e2 = error_at(64);
  CHECK(e2 < 0.3 * e1);
  CHECK(std::log2(e1 / e2) > 1.8);
}

TEST_CASE("time-averaged bracket is the four-term mean") {
  oracle::Rng rng(4);
  const auto g = make_grid_2d(6, 0, 1, 5, 0, 1);
  auto rnd = [&] { return Field2D(g, rng.uniform_vector(g.size(), -1, 1)); };
  const auto p0 = rnd(), p1 = rnd(), w0 = rnd(), w1 = rnd();
  const auto avg = bracket_time_avg(p0, p1, w0, w1);
  const auto a = vec(arakawa(p1, w1)), b = vec(arakawa(p1, w0)), c = vec(arakawa(p0, w1)),
             d = vec(arakawa(p0, w0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(avg.values()[i] == Catch::Approx(0.25 * (a[i] + b[i] + c[i] + d[i])).margin(1e-12));
  }
}

TEST_CASE("workspace accumulate adds a weighted bracket") {
  oracle::Rng rng(8);
  const auto g = make_grid_2d(7, 0, 1, 9, 0, 1);
  const auto psi = rng.uniform_vector(g.size(), -1, 1);
  const auto w = rng.uniform_vector(g.size(), -1, 1);
  std::vector<double> out(g.size(), 1.0);
  const BracketWorkspace ws(g);
  ws.accumulate(psi, w, -0.5, out);
  const auto ref = oracle::arakawa(psi, w, 7, 9, g.hx(), g.hy());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(out[i] == Catch::Approx(1.0 - 0.5 * ref[i]).margin(1e-12));
  }
}
