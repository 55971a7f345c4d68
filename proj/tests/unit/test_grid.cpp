#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numeric>

#include "oracles.hpp"
#include "varpde/errors.hpp"
#include "varpde/grid.hpp"

using namespace varpde;
using Catch::Approx;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected varpde::Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("wrap_index folds signed indices") {
  CHECK(wrap_index(-1, 5) == 4);
  CHECK(wrap_index(5, 5) == 0);
  CHECK(wrap_index(-11, 5) == 4);
  CHECK(wrap_index(7, 5) == 2);
}

TEST_CASE("half-open grid has no duplicated endpoint") {
  const auto g = make_grid_1d(255, -0.5, 0.5);
  CHECK(g.h == Approx(1.0 / 255));
  CHECK(g.node(0) == -0.5);
  CHECK(g.node(254) == Approx(0.5 - 1.0 / 255));
  CHECK(g.wrap_coordinate(0.5) == Approx(-0.5));
  CHECK(g.wrap_coordinate(-0.6) == Approx(0.4));
}

TEST_CASE("invalid grids are rejected") {
  CHECK(kind_of([] { make_grid_1d(1, 0, 1); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([] { make_grid_1d(0, 0, 1); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([] { make_grid_1d(8, 1, 1); }) == ErrorKind::InvalidGrid);
  CHECK(kind_of([] { make_grid_2d(8, 0, 1, 1, 0, 1); }) == ErrorKind::InvalidGrid);
}

TEST_CASE("fields validate size and finiteness") {
  const auto g = make_grid_1d(4, 0, 1);
  CHECK(kind_of([&] { Field1D(g, {1, 2, 3}); }) == ErrorKind::InvalidField);
  CHECK(kind_of([&] {
          Field1D(g, {1, 2, std::numeric_limits<double>::quiet_NaN(), 4});
        }) == ErrorKind::InvalidField);
  CHECK(kind_of([&] {
          sample_field_1d(g, [](double x) { return 1.0 / (x - 0.25); });
        }) == ErrorKind::InvalidField);
  const Field1D f(g, {1, 2, 3, 4});
  CHECK(f.at(-1) == 4);
  CHECK(f.at(4) == 1);
  CHECK(f.max_abs() == 4);
}

TEST_CASE("2D storage is x fastest") {
  const auto g = make_grid_2d(3, 0, 3, 2, 0, 2);
  const auto f = sample_field_2d(g, [](double x, double y) { return x + 10 * y; });
  CHECK(f.values()[1] == Approx(1));
  CHECK(f.values()[3] == Approx(10));
  CHECK(f(2, 1) == Approx(12));
  CHECK(f.at(-1, -1) == Approx(12));
  CHECK(f.mean() == Approx((0 + 1 + 2 + 10 + 11 + 12) / 6.0));
}

TEST_CASE("mismatched grids are detected") {
  const Field1D a = Field1D::zeros(make_grid_1d(5, 0, 1));
  const Field1D b = Field1D::zeros(make_grid_1d(5, 0, 2));
  CHECK(kind_of([&] { require_same_grid(a, b, "test"); }) == ErrorKind::GridMismatch);
}

TEST_CASE("spacetime field stores rows in order") {
  const auto g = make_grid_1d(3, 0, 1);
  SpacetimeField1D st(g, 0.1);
  st.append(Field1D(g, {1, 2, 3}));
  st.append(Field1D(g, {4, 5, 6}));
  CHECK(st.n_t() == 2);
  CHECK(st(1, 2) == 6);
  CHECK(st.row(0)[1] == 2);
  CHECK(kind_of([&] { st.append(Field1D::zeros(make_grid_1d(4, 0, 1))); }) ==
        ErrorKind::GridMismatch);
}

TEST_CASE("pairwise sum agrees with long double accumulation") {
  oracle::Rng rng(7);
  for (std::size_t n : {1u, 31u, 32u, 33u, 1000u}) {
    const auto v = rng.uniform_vector(n, -1, 1);
    long double ref = 0;
    for (double x : v) ref += x;
    CHECK(pairwise_sum(v) == Approx(static_cast<double>(ref)).margin(1e-13));
  }
}
