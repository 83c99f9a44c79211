#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "seidel/matrix.hpp"

namespace seidel {

/// Monic integer polynomial; coefficients()[k] multiplies x^k.
class IntPolynomial {
 public:
  /// Throws InvalidArgument if empty or not monic.
  explicit IntPolynomial(std::vector<mpz_class> ascending);

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  const mpz_class& operator[](std::size_t k) const { return c_[k]; }

  /// Horner evaluation in long double.
  long double evaluate(long double x) const;

  /// "x^3 - 3x - 2"
  std::string to_string() const;
  /// Decimal strings from the leading coefficient down.
  std::vector<std::string> descending_strings() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  std::vector<mpz_class> c_;
};

/// det(xI - M) by the Faddeev-LeVerrier recurrence over exact integers:
///   M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
IntPolynomial charpoly_exact(const IntSymMatrix& mat);

/// Largest k with (x - r)^k dividing p.
std::size_t integer_root_multiplicity(const IntPolynomial& p, std::int64_t r);

}  // namespace seidel
