#pragma once

#include <stdexcept>
#include <string>

namespace varpde {

enum class ErrorKind {
  InvalidGrid,
  InvalidField,
  GridMismatch,
  SingularSystem,
  LinearSolve,
  NonConvergence,
  UnsupportedBootstrap,
  InvalidParam,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind drives the
/// CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an iterative solve stops before reaching its tolerance.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, int iterations,
                      double last_residual)
      : Error(ErrorKind::NonConvergence, what),
        iterations_(iterations),
        last_residual_(last_residual) {}

  int iterations() const noexcept { return iterations_; }
  double last_residual() const noexcept { return last_residual_; }

 private:
  int iterations_;
  double last_residual_;
};

}  // namespace varpde
