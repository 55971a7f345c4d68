#include "varpde/gmres.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void true_residual(const LinearOperator& op, std::span<const double> b,
                   std::span<const double> x, std::vector<double>& r) {
  op(x, r);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
}

}  // namespace

GmresResult gmres(const LinearOperator& op, std::span<const double> b,
                  std::span<double> x, const GmresOptions& options) {
  const std::size_t n = b.size();
  if (x.size() != n) {
    throw Error(ErrorKind::InvalidParam, "gmres: solution/rhs size mismatch");
  }
  const std::size_t m = std::max<std::size_t>(1, std::min(options.restart, n));
  const double target =
      std::max(options.relative_tolerance * norm2(b), options.absolute_tolerance);

  GmresResult result;
  std::vector<double> r(n);
  true_residual(op, b, x, r);
  double beta = norm2(r);
  result.initial_residual = beta;
  result.residual = beta;
  if (beta <= target) {
    result.converged = true;
    return result;
  }

  std::vector<std::vector<double>> basis(m + 1, std::vector<double>(n));
  std::vector<double> hessenberg((m + 1) * m, 0.0);  // column-major (m+1) x m
  std::vector<double> cs(m), sn(m), g(m + 1), y(m);
  auto H = [&](std::size_t i, std::size_t j) -> double& {
    return hessenberg[j * (m + 1) + i];
  };

  while (result.iterations < options.max_iterations) {
    std::fill(hessenberg.begin(), hessenberg.end(), 0.0);
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;
    for (std::size_t i = 0; i < n; ++i) basis[0][i] = r[i] / beta;

    std::size_t used = 0;
    for (std::size_t j = 0; j < m && result.iterations < options.max_iterations; ++j) {
      auto& w = basis[j + 1];
      op(basis[j], w);
      ++result.iterations;
      for (std::size_t i = 0; i <= j; ++i) {
        H(i, j) = dot(w, basis[i]);
        for (std::size_t l = 0; l < n; ++l) w[l] -= H(i, j) * basis[i][l];
      }
      const double h_next = norm2(w);
      H(j + 1, j) = h_next;
      if (h_next > 0.0) {
        for (double& v : w) v /= h_next;
      }
      for (std::size_t i = 0; i < j; ++i) {
        const double t = cs[i] * H(i, j) + sn[i] * H(i + 1, j);
        H(i + 1, j) = -sn[i] * H(i, j) + cs[i] * H(i + 1, j);
        H(i, j) = t;
      }
      const double denom = std::hypot(H(j, j), H(j + 1, j));
      cs[j] = denom > 0.0 ? H(j, j) / denom : 1.0;
      sn[j] = denom > 0.0 ? H(j + 1, j) / denom : 0.0;
      H(j, j) = denom;
      H(j + 1, j) = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      used = j + 1;
      if (std::abs(g[j + 1]) <= target || h_next == 0.0) break;
    }

    // back substitution on the triangularised Hessenberg system
    for (std::size_t ii = used; ii-- > 0;) {
      double s = g[ii];
      for (std::size_t l = ii + 1; l < used; ++l) s -= H(ii, l) * y[l];
      y[ii] = H(ii, ii) != 0.0 ? s / H(ii, ii) : 0.0;
    }
    for (std::size_t l = 0; l < used; ++l) {
      for (std::size_t i = 0; i < n; ++i) x[i] += y[l] * basis[l][i];
    }

    true_residual(op, b, x, r);
    const double previous = beta;
    beta = norm2(r);
    result.residual = beta;
    if (beta <= target) {
      result.converged = true;
      return result;
    }
    if (!(beta < 0.5 * previous)) break;  // stagnated at the round-off floor
  }
  return result;
}

}  // namespace varpde
