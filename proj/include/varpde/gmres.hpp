#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace varpde {

/// y = A x for a matrix-free operator.
using LinearOperator =
    std::function<void(std::span<const double> x, std::span<double> y)>;

struct GmresOptions {
  double relative_tolerance = 1e-14;
  double absolute_tolerance = 0.0;
  std::size_t restart = 50;
  std::size_t max_iterations = 1000;
};

struct GmresResult {
  bool converged = false;
  std::size_t iterations = 0;
  double initial_residual = 0.0;
  /// True residual norm ||b - A x|| at exit.
  double residual = 0.0;
};

/// Restarted GMRES(m) with modified Gram-Schmidt and Givens rotations. x holds
/// the initial guess on entry and the solution on exit. Stops when
/// ||b - A x||_2 <= max(rtol ||b||_2, atol), when the iteration budget is
/// spent, or when a restart cycle no longer reduces the true residual
/// (round-off floor); the last two report converged = false.
GmresResult gmres(const LinearOperator& op, std::span<const double> b,
                  std::span<double> x, const GmresOptions& options = {});

}  // namespace varpde
