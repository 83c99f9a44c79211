#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/spectral.hpp"

namespace seidel {

/// An integer eigenvalue contributed with a known multiplicity, independent of
/// the spectrum of G.
struct Padding {
  std::int64_t value = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const Padding&, const Padding&) = default;
};

/// Predicted spectrum of a construction: the affine image scale*sigma_i + shift
/// of G's Seidel eigenvalues, plus integer padding blocks.
struct ClosedFormSpectrum {
  int m = 0;
  std::size_t order = 0;
  std::int64_t scale = 1;
  std::int64_t shift = 0;
  std::vector<double> mapped;
  std::vector<Padding> padding;

  /// All eigenvalues, sorted descending.
  std::vector<double> values() const;
  Spectrum as_spectrum(double group_tol = Tolerances{}.group_tol) const;
  double energy() const;

  friend bool operator==(const ClosedFormSpectrum&, const ClosedFormSpectrum&) = default;
};

/// Spectrum of D_m(G): {m s + (m-1)} U {-1^(mn-n)}.
ClosedFormSpectrum lemma1_spectrum(const Spectrum& sigma, int m, std::size_t n);
/// Spectrum of D_m*(G): {m s - (m-1)} U {1^(mn-n)}.
ClosedFormSpectrum lemma2_spectrum(const Spectrum& sigma, int m, std::size_t n);
/// First: D_m*(D_m(G)); second: D_m(D_m*(G)).
std::pair<ClosedFormSpectrum, ClosedFormSpectrum> theorem2_spectra(const Spectrum& sigma, int m,
                                                                   std::size_t n);

/// |k s + c| - |k s - c| with k = m^power and c = (m-1)^power.
double sign_ledger_difference(double sigma, int m, int power);

struct EquienergyCheck {
  bool equienergetic = false;
  double delta = 0.0;  // |SE(g1) - SE(g2)|
};

EquienergyCheck check_equienergetic(const Graph& g1, const Graph& g2,
                                    double energy_tol = Tolerances{}.energy_tol,
                                    const Tolerances& tol = {});
bool check_cospectral(const Graph& g1, const Graph& g2, double num_tol = Tolerances{}.num_tol,
                      const Tolerances& tol = {});
bool spectra_agree(const std::vector<double>& a, const std::vector<double>& b, double num_tol);

struct HypothesisReport {
  int m = 0;
  int power = 1;
  double bound = 0.0;  // ((m-1)/m)^power
  double min_abs_eigenvalue = 0.0;
  bool balanced = false;
  Inertia inertia;
  /// min_abs_eigenvalue >= bound - zero_tol
  bool bound_met = false;
  /// |min_abs_eigenvalue - bound| <= zero_tol
  bool boundary = false;
  bool satisfied = false;  // balanced && bound_met
  double margin = 0.0;     // min_abs_eigenvalue - bound

  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

HypothesisReport check_hypothesis(const Spectrum& sigma, int m, int power, const Tolerances& tol = {});
HypothesisReport check_hypothesis(const Graph& g, int m, int power, const Tolerances& tol = {});

enum class Verdict {
  kEquienergetic,     // hypothesis holds, energies equal, not cospectral
  kNotEquienergetic,  // bound holds, inertia unbalanced, energies differ
  kNoClaim,           // bound fails; observations recorded only
  kViolation,         // a theorem conclusion failed
};

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Certificate {
  int theorem = 1;
  std::string graph6;
  int m = 2;
  std::size_t n = 0;
  HypothesisReport hypothesis;
  Spectrum spectrum_g;
  Spectrum spectrum_a;
  Spectrum spectrum_b;
  ClosedFormSpectrum closed_a;
  ClosedFormSpectrum closed_b;
  double energy_a = 0.0;
  double energy_b = 0.0;
  double energy_delta = 0.0;  // energy_a - energy_b
  bool equienergetic = false;
  bool cospectral = false;
  bool closed_form_agrees = false;
  bool exact_checked = false;
  bool exact_multiplicities_verified = false;
  Verdict verdict = Verdict::kNoClaim;

  bool violation() const { return verdict == Verdict::kViolation; }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
  Tolerances tol;
  std::size_t max_dimension = kDefaultMaxDimension;
  bool exact = true;
  /// Constructions larger than this skip the charpoly oracle.
  std::size_t exact_max_order = 200;
};

/// Compares D_m(G) against D_m*(G).
Certificate certify_theorem1(const Graph& g, int m, const CertifyOptions& opts = {});
/// Compares D_m*(D_m(G)) against D_m(D_m*(G)).
Certificate certify_theorem2(const Graph& g, int m, const CertifyOptions& opts = {});
Certificate certify(int theorem, const Graph& g, int m, const CertifyOptions& opts = {});

std::string render_certificate(const Certificate& c);

}  // namespace seidel
