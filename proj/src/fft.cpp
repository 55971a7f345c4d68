#include "varpde/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <utility>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

constexpr unsigned kPlanFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

fftw_complex* as_fftw(Complex* p) { return reinterpret_cast<fftw_complex*>(p); }
fftw_complex* as_fftw(const Complex* p) {
  // FFTW never writes to the input of an out-of-place complex transform.
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(p));
}

void execute(fftw_plan_s* plan, std::size_t n, std::span<const Complex> in,
             std::span<Complex> out) {
  if (in.size() != n || out.size() != n) {
    throw Error(ErrorKind::InvalidParam, "DFT buffer length mismatch");
  }
  if (in.data() == out.data()) {
    throw Error(ErrorKind::InvalidParam, "DFT plans are out-of-place");
  }
  fftw_execute_dft(plan, as_fftw(in.data()), as_fftw(out.data()));
}

void destroy(fftw_plan_s*& plan) {
  if (plan != nullptr) {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
    plan = nullptr;
  }
}

}  // namespace

Dft1D::Dft1D(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidParam, "Dft1D: zero length");
  std::lock_guard lock(planner_mutex());
  auto* in = fftw_alloc_complex(n);
  auto* out = fftw_alloc_complex(n);
  const int len = static_cast<int>(n);
  forward_ = fftw_plan_dft_1d(len, in, out, FFTW_FORWARD, kPlanFlags);
  backward_ = fftw_plan_dft_1d(len, in, out, FFTW_BACKWARD, kPlanFlags);
  fftw_free(in);
  fftw_free(out);
  if (forward_ == nullptr || backward_ == nullptr) {
    throw std::runtime_error("FFTW failed to create a 1D plan");
  }
}

Dft1D::~Dft1D() {
  destroy(forward_);
  destroy(backward_);
}

Dft1D::Dft1D(Dft1D&& other) noexcept
    : n_(other.n_),
      forward_(std::exchange(other.forward_, nullptr)),
      backward_(std::exchange(other.backward_, nullptr)) {}

Dft1D& Dft1D::operator=(Dft1D&& other) noexcept {
  if (this != &other) {
    destroy(forward_);
    destroy(backward_);
    n_ = other.n_;
    forward_ = std::exchange(other.forward_, nullptr);
    backward_ = std::exchange(other.backward_, nullptr);
  }
  return *this;
}

void Dft1D::forward(std::span<const Complex> in, std::span<Complex> out) const {
  execute(forward_, n_, in, out);
}

void Dft1D::backward(std::span<const Complex> in, std::span<Complex> out) const {
  execute(backward_, n_, in, out);
}

Dft2D::Dft2D(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::InvalidParam, "Dft2D: zero extent");
  }
  std::lock_guard lock(planner_mutex());
  auto* in = fftw_alloc_complex(rows * cols);
  auto* out = fftw_alloc_complex(rows * cols);
  const int r = static_cast<int>(rows);
  const int c = static_cast<int>(cols);
  forward_ = fftw_plan_dft_2d(r, c, in, out, FFTW_FORWARD, kPlanFlags);
  backward_ = fftw_plan_dft_2d(r, c, in, out, FFTW_BACKWARD, kPlanFlags);
  fftw_free(in);
  fftw_free(out);
  if (forward_ == nullptr || backward_ == nullptr) {
    throw std::runtime_error("FFTW failed to create a 2D plan");
  }
}

Dft2D::~Dft2D() {
  destroy(forward_);
  destroy(backward_);
}

Dft2D::Dft2D(Dft2D&& other) noexcept
    : rows_(other.rows_),
      cols_(other.cols_),
      forward_(std::exchange(other.forward_, nullptr)),
      backward_(std::exchange(other.backward_, nullptr)) {}

Dft2D& Dft2D::operator=(Dft2D&& other) noexcept {
  if (this != &other) {
    destroy(forward_);
    destroy(backward_);
    rows_ = other.rows_;
    cols_ = other.cols_;
    forward_ = std::exchange(other.forward_, nullptr);
    backward_ = std::exchange(other.backward_, nullptr);
  }
  return *this;
}

void Dft2D::forward(std::span<const Complex> in, std::span<Complex> out) const {
  execute(forward_, rows_ * cols_, in, out);
}

void Dft2D::backward(std::span<const Complex> in, std::span<Complex> out) const {
  execute(backward_, rows_ * cols_, in, out);
}

}  // namespace varpde
