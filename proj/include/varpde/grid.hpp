#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace varpde {

/// Maps any signed index onto [0, n). Requires n >= 1.
constexpr std::size_t wrap_index(std::ptrdiff_t j, std::size_t n) noexcept {
  const auto m = static_cast<std::ptrdiff_t>(n);
  const std::ptrdiff_t r = j % m;
  return static_cast<std::size_t>(r < 0 ? r + m : r);
}

/// Uniform half-open periodic grid on [x_min, x_max). Node n coincides with
/// node 0, so no endpoint is duplicated.
struct PeriodicGrid1D {
  std::size_t n = 0;
  double x_min = 0.0;
  double x_max = 0.0;
  double h = 0.0;

  double node(std::size_t j) const noexcept {
    return x_min + static_cast<double>(j) * h;
  }
  double length() const noexcept { return x_max - x_min; }

  /// Folds an arbitrary coordinate back into [x_min, x_max).
  double wrap_coordinate(double x) const noexcept;

  bool operator==(const PeriodicGrid1D&) const = default;
};

PeriodicGrid1D make_grid_1d(std::ptrdiff_t n, double x_min, double x_max);

/// Tensor product of two periodic axes. Storage is row-major with x
/// fastest: node (j, k) lives at k * nx + j.
struct PeriodicGrid2D {
  PeriodicGrid1D x;
  PeriodicGrid1D y;

  std::size_t nx() const noexcept { return x.n; }
  std::size_t ny() const noexcept { return y.n; }
  std::size_t size() const noexcept { return x.n * y.n; }
  double hx() const noexcept { return x.h; }
  double hy() const noexcept { return y.h; }
  double cell_area() const noexcept { return x.h * y.h; }

  std::size_t index(std::size_t j, std::size_t k) const noexcept {
    return k * x.n + j;
  }
  std::size_t wrapped_index(std::ptrdiff_t j, std::ptrdiff_t k) const noexcept {
    return index(wrap_index(j, x.n), wrap_index(k, y.n));
  }

  bool operator==(const PeriodicGrid2D&) const = default;
};

PeriodicGrid2D make_grid_2d(std::ptrdiff_t nx, double x_min, double x_max,
                            std::ptrdiff_t ny, double y_min, double y_max);

/// Grid samples of a scalar field on a 1D periodic grid. Immutable after
/// construction; all values are finite.
class Field1D {
 public:
  Field1D() = default;
  Field1D(const PeriodicGrid1D& grid, std::vector<double> values);
  static Field1D zeros(const PeriodicGrid1D& grid);

  const PeriodicGrid1D& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  double operator[](std::size_t j) const noexcept { return values_[j]; }
  /// Periodic access, any signed index.
  double at(std::ptrdiff_t j) const noexcept {
    return values_[wrap_index(j, values_.size())];
  }

  double max_abs() const noexcept;

 private:
  PeriodicGrid1D grid_{};
  std::vector<double> values_;
};

class Field2D {
 public:
  Field2D() = default;
  Field2D(const PeriodicGrid2D& grid, std::vector<double> values);
  static Field2D zeros(const PeriodicGrid2D& grid);

  const PeriodicGrid2D& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  double operator()(std::size_t j, std::size_t k) const noexcept {
    return values_[grid_.index(j, k)];
  }
  double at(std::ptrdiff_t j, std::ptrdiff_t k) const noexcept {
    return values_[grid_.wrapped_index(j, k)];
  }

  double max_abs() const noexcept;
  double mean() const noexcept;

 private:
  PeriodicGrid2D grid_{};
  std::vector<double> values_;
};

/// Full space-time solution matrix: row i holds the field at t0 + i * h_t.
class SpacetimeField1D {
 public:
  SpacetimeField1D(const PeriodicGrid1D& grid, double h_t);

  void append(const Field1D& level);

  const PeriodicGrid1D& grid() const noexcept { return grid_; }
  double h_t() const noexcept { return h_t_; }
  std::size_t n_t() const noexcept { return n_t_; }
  std::size_t n() const noexcept { return grid_.n; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {values_.data() + i * grid_.n, grid_.n};
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return values_[i * grid_.n + j];
  }

 private:
  PeriodicGrid1D grid_;
  double h_t_;
  std::size_t n_t_ = 0;
  std::vector<double> values_;
};

Field1D sample_field_1d(const PeriodicGrid1D& grid,
                        const std::function<double(double)>& f);
Field2D sample_field_2d(const PeriodicGrid2D& grid,
                        const std::function<double(double, double)>& f);

/// Throws GridMismatch unless both fields live on the same grid.
void require_same_grid(const Field1D& a, const Field1D& b, const char* op);
void require_same_grid(const Field2D& a, const Field2D& b, const char* op);

/// Deterministic pairwise (tree) summation.
double pairwise_sum(std::span<const double> values) noexcept;

}  // namespace varpde
