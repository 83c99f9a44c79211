#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seidel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (loops where a simple graph is
/// required, m < 2, size mismatch, non-symmetric matrix, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured maximum matrix dimension.
class DimensionError : public Error {
 public:
  DimensionError(std::size_t requested, std::size_t limit);

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// The Jacobi eigensolver did not reach its convergence threshold.
class ConvergenceError : public Error {
 public:
  ConvergenceError(int sweeps, double off_norm, double threshold);

  int sweeps() const { return sweeps_; }
  double off_norm() const { return off_norm_; }

 private:
  int sweeps_;
  double off_norm_;
};

}  // namespace seidel
