#pragma once

// Test-only helpers. The oracles here deliberately avoid the library's own
// numeric and exact paths: eigenvalues come from Eigen, determinants from
// fraction-free Bareiss elimination, isomorphism classes from brute force.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gmpxx.h>

#include "seidel/graph.hpp"
#include "seidel/graph6.hpp"
#include "seidel/matrix.hpp"

namespace seidel::testing {

inline std::vector<std::string> catalog_lines() {
  std::ifstream f(std::string(SEIDEL_TEST_DATA) + "/graphs_n1_6.g6");
  if (!f) throw std::runtime_error("missing test catalog graphs_n1_6.g6");
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

inline std::vector<Graph> catalog(std::size_t max_n = 6) {
  std::vector<Graph> out;
  for (const auto& line : catalog_lines()) {
    auto g = graph_from_graph6(line);
    if (g.order() <= max_n) out.push_back(std::move(g));
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Seidel eigenvalues straight from the definition, via Eigen; descending.
inline std::vector<double> eigen_seidel_eigenvalues(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd s(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      s(i, j) = i == j ? 0.0 : (g.adjacent(i, j) ? -1.0 : 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

inline std::vector<double> eigen_eigenvalues(const IntSymMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

/// Exact determinant by Bareiss fraction-free elimination.
inline mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det(x I - M) at an integer x.
inline mpz_class det_x_minus(const IntSymMatrix& m, long x) {
  const std::size_t n = m.dim();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : 0) - static_cast<long>(m(i, j));
  return bareiss_det(std::move(a));
}

/// Lexicographically smallest upper-triangle bit string over all relabelings.
inline std::vector<bool> canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]));
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline IntSymMatrix dense(std::size_t n, std::initializer_list<std::int64_t> entries) {
  return IntSymMatrix(n, std::vector<std::int64_t>(entries));
}

}  // namespace seidel::testing
