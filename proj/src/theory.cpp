#include "seidel/theory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <tuple>

#include "seidel/charpoly.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph6.hpp"

namespace seidel {

std::vector<double> ClosedFormSpectrum::values() const {
  std::vector<double> v = mapped;
  for (const auto& p : padding) v.insert(v.end(), p.multiplicity, static_cast<double>(p.value));
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

Spectrum ClosedFormSpectrum::as_spectrum(double group_tol) const {
  return Spectrum::from_values(values(), group_tol);
}

double ClosedFormSpectrum::energy() const {
  double e = 0.0;
  for (double x : mapped) e += std::abs(x);
  for (const auto& p : padding) e += static_cast<double>(p.multiplicity) * std::abs(static_cast<double>(p.value));
  return e;
}

namespace {

void require_lemma_args(const Spectrum& sigma, int m, std::size_t n) {
  if (m < 2) throw InvalidArgument("blow-up parameter m must be >= 2, got " + std::to_string(m));
  if (sigma.size() != n) {
    throw InvalidArgument("spectrum has " + std::to_string(sigma.size()) + " values but n = " +
                          std::to_string(n));
  }
}

ClosedFormSpectrum affine_image(const Spectrum& sigma, int m, std::int64_t scale, std::int64_t shift,
                                std::size_t order, std::vector<Padding> padding) {
  ClosedFormSpectrum c;
  c.m = m;
  c.order = order;
  c.scale = scale;
  c.shift = shift;
  c.mapped.reserve(sigma.size());
  for (double s : sigma.values) {
    c.mapped.push_back(static_cast<double>(scale) * s + static_cast<double>(shift));
  }
  c.padding = std::move(padding);
  return c;
}

}  // namespace

ClosedFormSpectrum lemma1_spectrum(const Spectrum& sigma, int m, std::size_t n) {
  require_lemma_args(sigma, m, n);
  const std::size_t mn = static_cast<std::size_t>(m) * n;
  return affine_image(sigma, m, m, m - 1, mn, {{-1, mn - n}});
}

ClosedFormSpectrum lemma2_spectrum(const Spectrum& sigma, int m, std::size_t n) {
  require_lemma_args(sigma, m, n);
  const std::size_t mn = static_cast<std::size_t>(m) * n;
  return affine_image(sigma, m, m, -(m - 1), mn, {{1, mn - n}});
}

std::pair<ClosedFormSpectrum, ClosedFormSpectrum> theorem2_spectra(const Spectrum& sigma, int m,
                                                                   std::size_t n) {
  require_lemma_args(sigma, m, n);
  const std::int64_t mm = static_cast<std::int64_t>(m);
  const std::size_t mn = static_cast<std::size_t>(m) * n;
  const std::size_t mmn = static_cast<std::size_t>(m) * mn;
  const std::int64_t sq = (mm - 1) * (mm - 1);
  auto left = affine_image(sigma, m, mm * mm, sq, mmn, {{1 - 2 * mm, mn - n}, {1, mmn - mn}});
  auto right = affine_image(sigma, m, mm * mm, -sq, mmn, {{2 * mm - 1, mn - n}, {-1, mmn - mn}});
  return {std::move(left), std::move(right)};
}

double sign_ledger_difference(double sigma, int m, int power) {
  const double k = std::pow(static_cast<double>(m), power);
  const double c = std::pow(static_cast<double>(m - 1), power);
  return std::abs(k * sigma + c) - std::abs(k * sigma - c);
}

EquienergyCheck check_equienergetic(const Graph& g1, const Graph& g2, double energy_tol,
                                    const Tolerances& tol) {
  const double e1 = seidel_energy(g1, tol);
  const double e2 = seidel_energy(g2, tol);
  const double delta = std::abs(e1 - e2);
  return {delta <= energy_tol * std::max(1.0, e1), delta};
}

bool spectra_agree(const std::vector<double>& a, const std::vector<double>& b, double num_tol) {
  if (a.size() != b.size()) return false;
  std::vector<double> x = a;
  std::vector<double> y = b;
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k] - y[k]) > num_tol * std::max(1.0, std::abs(x[k]))) return false;
  }
  return true;
}

bool check_cospectral(const Graph& g1, const Graph& g2, double num_tol, const Tolerances& tol) {
  if (g1.order() != g2.order()) return false;
  return spectra_agree(seidel_spectrum(g1, tol).values, seidel_spectrum(g2, tol).values, num_tol);
}

HypothesisReport check_hypothesis(const Spectrum& sigma, int m, int power, const Tolerances& tol) {
  if (m < 2) throw InvalidArgument("blow-up parameter m must be >= 2, got " + std::to_string(m));
  if (power != 1 && power != 2) throw InvalidArgument("power must be 1 or 2");
  HypothesisReport h;
  h.m = m;
  h.power = power;
  h.bound = std::pow(static_cast<double>(m - 1) / static_cast<double>(m), power);
  h.min_abs_eigenvalue = sigma.min_abs();
  h.inertia = inertia_of(sigma, tol.zero_tol);
  h.balanced = h.inertia.balanced();
  h.margin = h.min_abs_eigenvalue - h.bound;
  h.bound_met = h.margin >= -tol.zero_tol;
  h.boundary = std::abs(h.margin) <= tol.zero_tol;
  h.satisfied = h.balanced && h.bound_met;
  return h;
}

HypothesisReport check_hypothesis(const Graph& g, int m, int power, const Tolerances& tol) {
  return check_hypothesis(seidel_spectrum(g, tol), m, power, tol);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kEquienergetic: return "equienergetic";
    case Verdict::kNotEquienergetic: return "not_equienergetic";
    case Verdict::kNoClaim: return "no_claim";
    case Verdict::kViolation: return "violation";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::kEquienergetic, Verdict::kNotEquienergetic, Verdict::kNoClaim,
                    Verdict::kViolation}) {
    if (s == to_string(v)) return v;
  }
  throw InvalidArgument("unknown verdict '" + s + "'");
}

namespace {

// Every padding value v must occur with multiplicity exactly
//   padding multiplicity + multiplicity of (v - shift) / scale in Spec_s(G),
// counting the latter only when the preimage is an integer (a rational root of
// a monic integer polynomial is an integer).
bool exact_paddings_hold(const IntPolynomial& constructed, const IntPolynomial& base,
                         const ClosedFormSpectrum& closed) {
  for (const auto& p : closed.padding) {
    std::size_t expected = p.multiplicity;
    const std::int64_t num = p.value - closed.shift;
    if (num % closed.scale == 0) expected += integer_root_multiplicity(base, num / closed.scale);
    if (integer_root_multiplicity(constructed, p.value) != expected) return false;
  }
  return true;
}

Certificate certify_impl(int theorem, const Graph& g, int m, const CertifyOptions& opts) {
  if (theorem != 1 && theorem != 2) throw InvalidArgument("theorem must be 1 or 2");
  if (m < 2) throw InvalidArgument("blow-up parameter m must be >= 2, got " + std::to_string(m));
  if (g.has_loops()) throw InvalidArgument("certification requires a graph without loops");

  const Tolerances& tol = opts.tol;
  const std::size_t n = g.order();
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::size_t order = theorem == 1 ? mm * n : mm * mm * n;
  if (order > opts.max_dimension) throw DimensionError(order, opts.max_dimension);

  Certificate c;
  c.theorem = theorem;
  c.graph6 = graph_to_graph6(g);
  c.m = m;
  c.n = n;
  c.spectrum_g = seidel_spectrum(g, tol);
  c.hypothesis = check_hypothesis(c.spectrum_g, m, theorem, tol);

  std::optional<Graph> a;
  std::optional<Graph> b;
  if (theorem == 1) {
    a = d_m(g, m, opts.max_dimension);
    b = d_m_star(g, m, opts.max_dimension);
    c.closed_a = lemma1_spectrum(c.spectrum_g, m, n);
    c.closed_b = lemma2_spectrum(c.spectrum_g, m, n);
  } else {
    a = d_m_star(d_m(g, m, opts.max_dimension), m, opts.max_dimension);
    b = d_m(d_m_star(g, m, opts.max_dimension), m, opts.max_dimension);
    std::tie(c.closed_a, c.closed_b) = theorem2_spectra(c.spectrum_g, m, n);
  }

  c.spectrum_a = seidel_spectrum(*a, tol);
  c.spectrum_b = seidel_spectrum(*b, tol);
  c.energy_a = c.spectrum_a.energy();
  c.energy_b = c.spectrum_b.energy();
  c.energy_delta = c.energy_a - c.energy_b;
  c.equienergetic = std::abs(c.energy_delta) <= tol.energy_tol * std::max(1.0, c.energy_a);
  c.cospectral = spectra_agree(c.spectrum_a.values, c.spectrum_b.values, tol.num_tol);
  c.closed_form_agrees = spectra_agree(c.spectrum_a.values, c.closed_a.values(), tol.num_tol) &&
                         spectra_agree(c.spectrum_b.values, c.closed_b.values(), tol.num_tol);

  if (opts.exact && order <= opts.exact_max_order) {
    c.exact_checked = true;
    const auto base = charpoly_exact(seidel_matrix(g));
    const auto pa = charpoly_exact(seidel_matrix(*a));
    const auto pb = charpoly_exact(seidel_matrix(*b));
    c.exact_multiplicities_verified =
        exact_paddings_hold(pa, base, c.closed_a) && exact_paddings_hold(pb, base, c.closed_b);
  }

  const auto& h = c.hypothesis;
  if (!c.closed_form_agrees || (c.exact_checked && !c.exact_multiplicities_verified)) {
    c.verdict = Verdict::kViolation;
  } else if (h.satisfied) {
    c.verdict = c.equienergetic && !c.cospectral ? Verdict::kEquienergetic : Verdict::kViolation;
  } else if (h.bound_met) {
    c.verdict = c.equienergetic ? Verdict::kViolation : Verdict::kNotEquienergetic;
  } else {
    c.verdict = Verdict::kNoClaim;
  }
  return c;
}

}  // namespace

Certificate certify_theorem1(const Graph& g, int m, const CertifyOptions& opts) {
  return certify_impl(1, g, m, opts);
}

Certificate certify_theorem2(const Graph& g, int m, const CertifyOptions& opts) {
  return certify_impl(2, g, m, opts);
}

Certificate certify(int theorem, const Graph& g, int m, const CertifyOptions& opts) {
  return certify_impl(theorem, g, m, opts);
}

std::string render_certificate(const Certificate& c) {
  const char* left = c.theorem == 1 ? "D_m(G)" : "D_m*(D_m(G))";
  const char* right = c.theorem == 1 ? "D_m*(G)" : "D_m(D_m*(G))";
  const auto& h = c.hypothesis;
  auto yes = [](bool b) { return b ? "yes" : "no"; };

  std::ostringstream os;
  os << "theorem " << c.theorem << " certificate\n"
     << "  graph        " << c.graph6 << " (n = " << c.n << "), m = " << c.m << "\n"
     << "  Spec_s(G)    " << format_grouped(c.spectrum_g) << "\n"
     << "  hypothesis   min|sigma| = " << format_number(h.min_abs_eigenvalue)
     << ", bound = " << format_number(h.bound) << ", inertia (" << h.inertia.n_pos << ", "
     << h.inertia.n_zero << ", " << h.inertia.n_neg << ")"
     << ", bound met: " << yes(h.bound_met) << ", balanced: " << yes(h.balanced)
     << ", satisfied: " << yes(h.satisfied) << (h.boundary ? " [boundary]" : "") << "\n"
     << "  " << left << "  " << format_grouped(c.spectrum_a) << "  SE = " << format_number(c.energy_a)
     << "\n"
     << "  " << right << "  " << format_grouped(c.spectrum_b) << "  SE = " << format_number(c.energy_b)
     << "\n"
     << "  energy delta " << format_number(c.energy_delta) << "\n"
     << "  equienergetic: " << yes(c.equienergetic) << ", cospectral: " << yes(c.cospectral)
     << ", closed form agrees: " << yes(c.closed_form_agrees) << ", exact multiplicities: "
     << (c.exact_checked ? yes(c.exact_multiplicities_verified) : "not checked") << "\n"
     << "  verdict      " << to_string(c.verdict) << "\n";
  return os.str();
}

}  // namespace seidel
