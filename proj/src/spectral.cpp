#include "seidel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

Spectrum Spectrum::from_values(std::vector<double> values, double group_tol) {
  Spectrum s;
  std::sort(values.begin(), values.end(), std::greater<>());
  s.values = std::move(values);

  std::size_t start = 0;
  for (std::size_t k = 1; k <= s.values.size(); ++k) {
    if (k == s.values.size() || s.values[k - 1] - s.values[k] > group_tol) {
      double sum = 0.0;
      for (std::size_t t = start; t < k; ++t) sum += s.values[t];
      s.groups.push_back({sum / static_cast<double>(k - start), k - start});
      start = k;
    }
  }
  for (std::size_t g = 1; g < s.groups.size(); ++g) {
    if (s.groups[g - 1].value - s.groups[g].value < 10.0 * group_tol) s.near_degenerate = true;
  }
  return s;
}

double Spectrum::sum() const {
  double t = 0.0;
  for (double v : values) t += v;
  return t;
}

double Spectrum::sum_of_squares() const {
  double t = 0.0;
  for (double v : values) t += v * v;
  return t;
}

double Spectrum::energy() const {
  double t = 0.0;
  for (double v : values) t += std::abs(v);
  return t;
}

double Spectrum::min_abs() const {
  double best = INFINITY;
  for (double v : values) best = std::min(best, std::abs(v));
  return best;
}

Inertia inertia_of(const Spectrum& s, double zero_tol) {
  Inertia in;
  for (double v : s.values) {
    if (v > zero_tol) {
      ++in.n_pos;
    } else if (v < -zero_tol) {
      ++in.n_neg;
    } else {
      ++in.n_zero;
    }
  }
  return in;
}

IntSymMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i * n + j] = g.adjacent(i, j);
  return IntSymMatrix(n, std::move(e));
}

IntSymMatrix seidel_matrix(const Graph& g) {
  if (g.has_loops()) throw InvalidArgument("the Seidel matrix is defined for graphs without loops");
  const std::size_t n = g.order();
  return IntSymMatrix::ones(n) - IntSymMatrix::identity(n) - 2 * adjacency_matrix(g);
}

Spectrum sym_eigenvalues(const RealMatrix& mat, const Tolerances& tol) {
  const std::size_t n = mat.rows();
  if (mat.cols() != n) {
    throw InvalidArgument("eigenvalues need a square matrix, got " + std::to_string(mat.rows()) + "x" +
                          std::to_string(mat.cols()));
  }
  RealMatrix a = mat;
  double fro2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j))) throw InvalidArgument("matrix has a non-finite entry");
      if (a(i, j) != a(j, i)) {
        throw InvalidArgument("matrix is not symmetric at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
      fro2 += a(i, j) * a(i, j);
    }
  }
  const double threshold = tol.conv_tol * std::sqrt(fro2);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  double off = off_norm();
  int sweep = 0;
  while (off > threshold) {
    if (sweep == tol.max_sweeps) throw ConvergenceError(sweep, off, threshold);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          a(r, p) = new_rp;
          a(p, r) = new_rp;
          a(r, q) = new_rq;
          a(q, r) = new_rq;
        }
      }
    }
    ++sweep;
    off = off_norm();
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  return Spectrum::from_values(std::move(diag), tol.group_tol);
}

Spectrum sym_eigenvalues(const IntSymMatrix& mat, const Tolerances& tol) {
  return sym_eigenvalues(RealMatrix(mat), tol);
}

Spectrum seidel_spectrum(const Graph& g, const Tolerances& tol) {
  return sym_eigenvalues(seidel_matrix(g), tol);
}

double seidel_energy(const Graph& g, const Tolerances& tol) { return seidel_spectrum(g, tol).energy(); }

Inertia seidel_inertia(const Graph& g, const Tolerances& tol) {
  return inertia_of(seidel_spectrum(g, tol), tol.zero_tol);
}

std::string format_number(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

std::string format_grouped(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.groups.size(); ++k) {
    if (k) out += ", ";
    out += format_number(s.groups[k].value) + "^" + std::to_string(s.groups[k].multiplicity);
  }
  return out + "}";
}

}  // namespace seidel
