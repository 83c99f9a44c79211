#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/matrix.hpp"

namespace seidel {

struct Tolerances {
  double num_tol = 1e-9;     // eigenvalue comparisons
  double zero_tol = 1e-7;    // inertia classification
  double group_tol = 1e-8;   // multiplicity clustering
  double energy_tol = 1e-8;  // relative, equienergy verdicts
  double conv_tol = 1e-12;   // Jacobi off-diagonal mass / Frobenius norm
  int max_sweeps = 100;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct EigenGroup {
  double value = 0.0;  // mean of the clustered eigenvalues
  std::size_t multiplicity = 0;

  friend bool operator==(const EigenGroup&, const EigenGroup&) = default;
};

/// Eigenvalues sorted descending, plus multiplicity groups formed by chaining
/// neighbours no further apart than group_tol.
struct Spectrum {
  std::vector<double> values;
  std::vector<EigenGroup> groups;
  /// Set when two adjacent groups are closer than 10 * group_tol, i.e. the
  /// grouping may be splitting a numerically degenerate eigenvalue.
  bool near_degenerate = false;

  static Spectrum from_values(std::vector<double> values, double group_tol = Tolerances{}.group_tol);

  std::size_t size() const { return values.size(); }
  double sum() const;
  double sum_of_squares() const;
  double energy() const;  // sum of |value|
  double min_abs() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_zero = 0;
  std::size_t n_neg = 0;

  std::size_t total() const { return n_pos + n_zero + n_neg; }
  /// Equal positive and negative counts with no zero eigenvalue.
  bool balanced() const { return n_zero == 0 && n_pos == n_neg; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia inertia_of(const Spectrum& s, double zero_tol = Tolerances{}.zero_tol);

IntSymMatrix adjacency_matrix(const Graph& g);
/// S = J - I - 2A. Throws InvalidArgument if g has loops.
IntSymMatrix seidel_matrix(const Graph& g);

/// Cyclic Jacobi, fixed row-by-row pivot order. Throws InvalidArgument for a
/// non-square or non-symmetric input and ConvergenceError after max_sweeps.
Spectrum sym_eigenvalues(const RealMatrix& mat, const Tolerances& tol = {});
Spectrum sym_eigenvalues(const IntSymMatrix& mat, const Tolerances& tol = {});

Spectrum seidel_spectrum(const Graph& g, const Tolerances& tol = {});
double seidel_energy(const Graph& g, const Tolerances& tol = {});
Inertia seidel_inertia(const Graph& g, const Tolerances& tol = {});

/// "{1^3, -3^1}": groups in descending order, values at 12 significant digits.
std::string format_grouped(const Spectrum& s);
/// %.12g, with values below 5e-13 in magnitude printed as 0.
std::string format_number(double v);

}  // namespace seidel
