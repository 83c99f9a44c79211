#include "seidel/matrix.hpp"

#include <algorithm>
#include <limits>

#include "seidel/errors.hpp"

namespace seidel {

IntSymMatrix::IntSymMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

IntSymMatrix::IntSymMatrix(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n) {
    throw InvalidArgument("matrix of dimension " + std::to_string(n) + " needs " +
                          std::to_string(n * n) + " entries, got " + std::to_string(a_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a_[i * n + j] != a_[j * n + i]) {
        throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
}

IntSymMatrix IntSymMatrix::identity(std::size_t n) {
  IntSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

IntSymMatrix IntSymMatrix::ones(std::size_t n) {
  IntSymMatrix m(n);
  std::fill(m.a_.begin(), m.a_.end(), 1);
  return m;
}

std::int64_t IntSymMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
  return t;
}

std::int64_t IntSymMatrix::frobenius_squared() const {
  std::int64_t s = 0;
  for (auto x : a_) s += x * x;
  return s;
}

IntSymMatrix IntSymMatrix::operator-() const {
  IntSymMatrix r(*this);
  for (auto& x : r.a_) x = -x;
  return r;
}

namespace {
void require_same_dim(const IntSymMatrix& a, const IntSymMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
  }
}
}  // namespace

IntSymMatrix operator+(const IntSymMatrix& a, const IntSymMatrix& b) {
  require_same_dim(a, b);
  IntSymMatrix r(a);
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

IntSymMatrix operator-(const IntSymMatrix& a, const IntSymMatrix& b) {
  require_same_dim(a, b);
  IntSymMatrix r(a);
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

IntSymMatrix operator*(std::int64_t k, const IntSymMatrix& a) {
  IntSymMatrix r(a);
  for (auto& x : r.a_) x *= k;
  return r;
}

IntSymMatrix kronecker(const IntSymMatrix& a, const IntSymMatrix& b, std::size_t max_dimension) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (nb != 0 && na > std::numeric_limits<std::size_t>::max() / nb) {
    throw DimensionError(std::numeric_limits<std::size_t>::max(), max_dimension);
  }
  const std::size_t n = na * nb;
  if (n > max_dimension) throw DimensionError(n, max_dimension);

  std::vector<std::int64_t> e(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const std::int64_t aij = a(i, j);
      for (std::size_t u = 0; u < nb; ++u) {
        std::int64_t* row = &e[(i * nb + u) * n + j * nb];
        for (std::size_t v = 0; v < nb; ++v) row[v] = aij * b(u, v);
      }
    }
  }
  return IntSymMatrix(n, std::move(e));
}

RealMatrix::RealMatrix(const IntSymMatrix& m) : RealMatrix(m.dim(), m.dim()) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = static_cast<double>(m.entries()[k]);
}

}  // namespace seidel
