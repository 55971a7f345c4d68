#include "varpde/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "varpde/errors.hpp"
#include "varpde/grid.hpp"

namespace varpde {

CirculantOperator::CirculantOperator(std::size_t n, std::vector<StencilTap> taps,
                                     double singular_tolerance)
    : n_(n), taps_(std::move(taps)), symbol_(n), dft_(n) {
  const double base = 2.0 * std::numbers::pi / static_cast<double>(n);
  double largest = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex lambda{0.0, 0.0};
    for (const auto& tap : taps_) {
      // reduce k * offset modulo n before taking the angle to keep it exact
      const auto phase_index =
          wrap_index(static_cast<std::ptrdiff_t>(k) * tap.offset, n);
      lambda += tap.weight * std::polar(1.0, base * static_cast<double>(phase_index));
    }
    symbol_[k] = lambda;
    largest = std::max(largest, std::abs(lambda));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(symbol_[k]) <= singular_tolerance * largest) {
      std::ostringstream msg;
      msg << "circulant system of size " << n << " is singular: mode " << k
          << " has eigenvalue " << std::abs(symbol_[k]);
      throw Error(ErrorKind::SingularSystem, msg.str());
    }
  }
}

std::vector<double> CirculantOperator::apply(std::span<const double> x) const {
  if (x.size() != n_) {
    throw Error(ErrorKind::GridMismatch, "CirculantOperator::apply: size mismatch");
  }
  std::vector<double> y(n_, 0.0);
  for (std::size_t j = 0; j < n_; ++j) {
    double s = 0.0;
    for (const auto& tap : taps_) {
      s += tap.weight * x[wrap_index(static_cast<std::ptrdiff_t>(j) + tap.offset, n_)];
    }
    y[j] = s;
  }
  return y;
}

std::vector<double> CirculantOperator::solve(std::span<const double> rhs) const {
  if (rhs.size() != n_) {
    throw Error(ErrorKind::GridMismatch, "CirculantOperator::solve: size mismatch");
  }
  std::vector<Complex> work(rhs.begin(), rhs.end());
  std::vector<Complex> spectrum(n_);
  dft_.forward(work, spectrum);
  for (std::size_t k = 0; k < n_; ++k) spectrum[k] /= symbol_[k];
  dft_.backward(spectrum, work);

  std::vector<double> x(n_);
  const double scale = 1.0 / static_cast<double>(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    x[j] = work[j].real() * scale;
    if (!std::isfinite(x[j])) {
      throw Error(ErrorKind::LinearSolve, "circulant solve produced non-finite values");
    }
  }
  return x;
}

}  // namespace varpde
