#include "seidel/charpoly.hpp"

#include <cstdlib>

#include "seidel/errors.hpp"

namespace seidel {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) {
  if (c_.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
  if (c_.back() != 1) throw InvalidArgument("polynomial is not monic");
}

long double IntPolynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc = acc * x + static_cast<long double>(c_[k].get_d());
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> IntPolynomial::descending_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (std::size_t k = c_.size(); k-- > 0;) out.push_back(c_[k].get_str());
  return out;
}

IntPolynomial charpoly_exact(const IntSymMatrix& mat) {
  const std::size_t n = mat.dim();
  std::vector<mpz_class> coef(n + 1);
  coef[n] = 1;
  if (n == 0) return IntPolynomial(std::move(coef));

  std::vector<mpz_class> m(n * n);  // M_k, starts at I
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  std::vector<mpz_class> am(n * n);

  for (std::size_t k = 1; k <= n; ++k) {
    const bool last = k == n;
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (last && i != j) continue;
        mpz_ptr out = am[i * n + j].get_mpz_t();
        mpz_set_ui(out, 0);
        for (std::size_t l = 0; l < n; ++l) {
          const std::int64_t a = mat(i, l);
          if (a == 0) continue;
          mpz_srcptr x = m[l * n + j].get_mpz_t();
          if (a == 1) {
            mpz_add(out, out, x);
          } else if (a == -1) {
            mpz_sub(out, out, x);
          } else if (a > 0) {
            mpz_addmul_ui(out, x, static_cast<unsigned long>(a));
          } else {
            mpz_submul_ui(out, x, static_cast<unsigned long>(-a));
          }
        }
        if (i == j) trace += am[i * n + j];
      }
    }
    // Exact by Newton's identities.
    mpz_class next;
    mpz_divexact_ui(next.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    next = -next;
    coef[n - k] = next;
    if (!last) {
      m.swap(am);
      for (std::size_t i = 0; i < n; ++i) m[i * n + i] += next;
    }
  }
  return IntPolynomial(std::move(coef));
}

std::size_t integer_root_multiplicity(const IntPolynomial& p, std::int64_t r) {
  std::vector<mpz_class> c = p.coefficients();
  const mpz_class root = static_cast<long>(r);
  std::size_t mult = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - r), highest coefficient first.
    const std::size_t d = c.size() - 1;
    std::vector<mpz_class> q(d);
    mpz_class acc = c[d];
    for (std::size_t k = d; k-- > 0;) {
      q[k] = acc;
      acc = acc * root + c[k];
    }
    if (acc != 0) break;
    c = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace seidel
