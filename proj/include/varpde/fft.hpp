#pragma once

#include <complex>
#include <cstddef>
#include <span>

struct fftw_plan_s;

namespace varpde {

using Complex = std::complex<double>;

/// Unnormalised complex DFT of length n backed by FFTW.
///   forward:  X_k = sum_j x_j exp(-2 pi i j k / n)
///   backward: x_j = sum_k X_k exp(+2 pi i j k / n)
/// Plans are created once; execution is thread-safe and accepts any
/// buffers of the right length.
class Dft1D {
 public:
  explicit Dft1D(std::size_t n);
  ~Dft1D();
  Dft1D(const Dft1D&) = delete;
  Dft1D& operator=(const Dft1D&) = delete;
  Dft1D(Dft1D&& other) noexcept;
  Dft1D& operator=(Dft1D&& other) noexcept;

  std::size_t size() const noexcept { return n_; }
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void backward(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  std::size_t n_ = 0;
  fftw_plan_s* forward_ = nullptr;
  fftw_plan_s* backward_ = nullptr;
};

/// Unnormalised 2D complex DFT on an (rows x cols) row-major array, the
/// column index running fastest.
class Dft2D {
 public:
  Dft2D(std::size_t rows, std::size_t cols);
  ~Dft2D();
  Dft2D(const Dft2D&) = delete;
  Dft2D& operator=(const Dft2D&) = delete;
  Dft2D(Dft2D&& other) noexcept;
  Dft2D& operator=(Dft2D&& other) noexcept;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  void forward(std::span<const Complex> in, std::span<Complex> out) const;
  void backward(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  fftw_plan_s* forward_ = nullptr;
  fftw_plan_s* backward_ = nullptr;
};

}  // namespace varpde
