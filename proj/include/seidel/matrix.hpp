#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seidel {

inline constexpr std::size_t kDefaultMaxDimension = 10'000;

/// Exact symmetric integer matrix, row-major dense storage.
///
/// Symmetry is a class invariant: every constructor validates it and every
/// operation preserves it.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(std::size_t n);  // zero matrix
  /// Throws InvalidArgument unless `entries` has n*n elements and is symmetric.
  IntSymMatrix(std::size_t n, std::vector<std::int64_t> entries);

  static IntSymMatrix zeros(std::size_t n) { return IntSymMatrix(n); }
  static IntSymMatrix identity(std::size_t n);
  static IntSymMatrix ones(std::size_t n);  // J

  std::size_t dim() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return a_; }

  std::int64_t trace() const;
  /// Sum of squared entries (exact).
  std::int64_t frobenius_squared() const;

  IntSymMatrix operator-() const;
  friend IntSymMatrix operator+(const IntSymMatrix& a, const IntSymMatrix& b);
  friend IntSymMatrix operator-(const IntSymMatrix& a, const IntSymMatrix& b);
  friend IntSymMatrix operator*(std::int64_t k, const IntSymMatrix& a);
  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

/// Block Kronecker product; entry ((i,u),(j,v)) = a(i,j) * b(u,v) with
/// row index i * b.dim() + u. Throws DimensionError past `max_dimension`.
IntSymMatrix kronecker(const IntSymMatrix& a, const IntSymMatrix& b,
                       std::size_t max_dimension = kDefaultMaxDimension);

/// Dense real matrix used as general input to the eigensolver. No symmetry
/// invariant; the solver checks it.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  explicit RealMatrix(const IntSymMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

}  // namespace seidel
