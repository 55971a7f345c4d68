#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varpde/fft.hpp"

namespace varpde {

/// One coefficient of a periodic stencil: contributes weight * x[j + offset]
/// to row j.
struct StencilTap {
  std::ptrdiff_t offset;
  double weight;
};

/// Real circulant matrix defined by a periodic stencil. Solves are done by
/// diagonalising with the DFT: the eigenvalue for mode k is
///   lambda_k = sum_taps weight * exp(2 pi i k offset / n).
class CirculantOperator {
 public:
  /// Throws SingularSystem if any eigenvalue is zero relative to the
  /// largest one (|lambda_k| <= singular_tolerance * max |lambda|).
  CirculantOperator(std::size_t n, std::vector<StencilTap> taps,
                    double singular_tolerance = 1e-13);

  std::size_t size() const noexcept { return n_; }
  std::span<const StencilTap> taps() const noexcept { return taps_; }
  std::span<const Complex> symbol() const noexcept { return symbol_; }

  std::vector<double> apply(std::span<const double> x) const;
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  std::size_t n_;
  std::vector<StencilTap> taps_;
  std::vector<Complex> symbol_;
  Dft1D dft_;
};

}  // namespace varpde
