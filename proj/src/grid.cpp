#include "varpde/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "varpde/errors.hpp"

namespace varpde {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::InvalidField: return "invalid-field";
    case ErrorKind::GridMismatch: return "grid-mismatch";
    case ErrorKind::SingularSystem: return "singular-system";
    case ErrorKind::LinearSolve: return "linear-solve";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::UnsupportedBootstrap: return "unsupported-bootstrap";
    case ErrorKind::InvalidParam: return "invalid-param";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

double PeriodicGrid1D::wrap_coordinate(double x) const noexcept {
  const double len = length();
  double r = std::fmod(x - x_min, len);
  if (r < 0.0) r += len;
  // fmod can return len itself after the shift for tiny negative inputs
  if (r >= len) r = 0.0;
  return x_min + r;
}

PeriodicGrid1D make_grid_1d(std::ptrdiff_t n, double x_min, double x_max) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidGrid,
                "grid needs at least 2 points, got " + std::to_string(n));
  }
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    std::ostringstream msg;
    msg << "degenerate grid bounds [" << x_min << ", " << x_max << ")";
    throw Error(ErrorKind::InvalidGrid, msg.str());
  }
  PeriodicGrid1D g;
  g.n = static_cast<std::size_t>(n);
  g.x_min = x_min;
  g.x_max = x_max;
  g.h = (x_max - x_min) / static_cast<double>(n);
  return g;
}

PeriodicGrid2D make_grid_2d(std::ptrdiff_t nx, double x_min, double x_max,
                            std::ptrdiff_t ny, double y_min, double y_max) {
  return PeriodicGrid2D{make_grid_1d(nx, x_min, x_max),
                        make_grid_1d(ny, y_min, y_max)};
}

namespace {

void require_finite(std::span<const double> values, const char* what) {
  const auto bad = std::find_if(values.begin(), values.end(),
                                [](double v) { return !std::isfinite(v); });
  if (bad != values.end()) {
    throw Error(ErrorKind::InvalidField,
                std::string(what) + ": non-finite value at node " +
                    std::to_string(bad - values.begin()));
  }
}

double max_abs_of(std::span<const double> values) noexcept {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

Field1D::Field1D(const PeriodicGrid1D& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n) {
    throw Error(ErrorKind::InvalidField,
                "Field1D: " + std::to_string(values_.size()) +
                    " values for a grid of " + std::to_string(grid_.n));
  }
  require_finite(values_, "Field1D");
}

Field1D Field1D::zeros(const PeriodicGrid1D& grid) {
  return Field1D(grid, std::vector<double>(grid.n, 0.0));
}

double Field1D::max_abs() const noexcept { return max_abs_of(values_); }

Field2D::Field2D(const PeriodicGrid2D& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorKind::InvalidField,
                "Field2D: " + std::to_string(values_.size()) +
                    " values for a grid of " + std::to_string(grid_.size()));
  }
  require_finite(values_, "Field2D");
}

Field2D Field2D::zeros(const PeriodicGrid2D& grid) {
  return Field2D(grid, std::vector<double>(grid.size(), 0.0));
}

double Field2D::max_abs() const noexcept { return max_abs_of(values_); }

double Field2D::mean() const noexcept {
  if (values_.empty()) return 0.0;
  return pairwise_sum(values_) / static_cast<double>(values_.size());
}

SpacetimeField1D::SpacetimeField1D(const PeriodicGrid1D& grid, double h_t)
    : grid_(grid), h_t_(h_t) {}

void SpacetimeField1D::append(const Field1D& level) {
  if (!(level.grid() == grid_)) {
    throw Error(ErrorKind::GridMismatch, "SpacetimeField1D: level grid differs");
  }
  values_.insert(values_.end(), level.values().begin(), level.values().end());
  ++n_t_;
}

Field1D sample_field_1d(const PeriodicGrid1D& grid,
                        const std::function<double(double)>& f) {
  std::vector<double> values(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    values[j] = f(grid.node(j));
    if (!std::isfinite(values[j])) {
      throw Error(ErrorKind::InvalidField,
                  "sample_field_1d: non-finite sample at node " +
                      std::to_string(j));
    }
  }
  return Field1D(grid, std::move(values));
}

Field2D sample_field_2d(const PeriodicGrid2D& grid,
                        const std::function<double(double, double)>& f) {
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.ny(); ++k) {
    for (std::size_t j = 0; j < grid.nx(); ++j) {
      const double v = f(grid.x.node(j), grid.y.node(k));
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::InvalidField,
                    "sample_field_2d: non-finite sample at node (" +
                        std::to_string(j) + ", " + std::to_string(k) + ")");
      }
      values[grid.index(j, k)] = v;
    }
  }
  return Field2D(grid, std::move(values));
}

void require_same_grid(const Field1D& a, const Field1D& b, const char* op) {
  if (!(a.grid() == b.grid())) {
    throw Error(ErrorKind::GridMismatch, std::string(op) + ": grid mismatch");
  }
}

void require_same_grid(const Field2D& a, const Field2D& b, const char* op) {
  if (!(a.grid() == b.grid())) {
    throw Error(ErrorKind::GridMismatch, std::string(op) + ": grid mismatch");
  }
}

double pairwise_sum(std::span<const double> values) noexcept {
  constexpr std::size_t kBlock = 32;
  if (values.size() <= kBlock) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace varpde
