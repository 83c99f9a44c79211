#include "seidel/serialize.hpp"

namespace seidel {

using nlohmann::json;

void to_json(json& j, const EigenGroup& g) { j = {{"value", g.value}, {"multiplicity", g.multiplicity}}; }

void from_json(const json& j, EigenGroup& g) {
  j.at("value").get_to(g.value);
  j.at("multiplicity").get_to(g.multiplicity);
}

void to_json(json& j, const Spectrum& s) {
  j = {{"values", s.values},
       {"groups", s.groups},
       {"near_degenerate", s.near_degenerate},
       {"grouped", format_grouped(s)}};
}

void from_json(const json& j, Spectrum& s) {
  j.at("values").get_to(s.values);
  j.at("groups").get_to(s.groups);
  j.at("near_degenerate").get_to(s.near_degenerate);
}

void to_json(json& j, const Inertia& i) {
  j = {{"n_pos", i.n_pos}, {"n_zero", i.n_zero}, {"n_neg", i.n_neg}};
}

void from_json(const json& j, Inertia& i) {
  j.at("n_pos").get_to(i.n_pos);
  j.at("n_zero").get_to(i.n_zero);
  j.at("n_neg").get_to(i.n_neg);
}

void to_json(json& j, const IntPolynomial& p) {
  j = {{"degree", p.degree()}, {"coefficients", p.descending_strings()}, {"text", p.to_string()}};
}

void to_json(json& j, const Padding& p) { j = {{"value", p.value}, {"multiplicity", p.multiplicity}}; }

void from_json(const json& j, Padding& p) {
  j.at("value").get_to(p.value);
  j.at("multiplicity").get_to(p.multiplicity);
}

void to_json(json& j, const ClosedFormSpectrum& c) {
  j = {{"m", c.m},           {"order", c.order},     {"scale", c.scale},
       {"shift", c.shift},   {"mapped", c.mapped},   {"padding", c.padding},
       {"energy", c.energy()}, {"grouped", format_grouped(c.as_spectrum())}};
}

void from_json(const json& j, ClosedFormSpectrum& c) {
  j.at("m").get_to(c.m);
  j.at("order").get_to(c.order);
  j.at("scale").get_to(c.scale);
  j.at("shift").get_to(c.shift);
  j.at("mapped").get_to(c.mapped);
  j.at("padding").get_to(c.padding);
}

void to_json(json& j, const HypothesisReport& h) {
  j = {{"m", h.m},
       {"power", h.power},
       {"bound", h.bound},
       {"min_abs_eigenvalue", h.min_abs_eigenvalue},
       {"balanced", h.balanced},
       {"inertia", h.inertia},
       {"bound_met", h.bound_met},
       {"boundary", h.boundary},
       {"satisfied", h.satisfied},
       {"margin", h.margin}};
}

void from_json(const json& j, HypothesisReport& h) {
  j.at("m").get_to(h.m);
  j.at("power").get_to(h.power);
  j.at("bound").get_to(h.bound);
  j.at("min_abs_eigenvalue").get_to(h.min_abs_eigenvalue);
  j.at("balanced").get_to(h.balanced);
  j.at("inertia").get_to(h.inertia);
  j.at("bound_met").get_to(h.bound_met);
  j.at("boundary").get_to(h.boundary);
  j.at("satisfied").get_to(h.satisfied);
  j.at("margin").get_to(h.margin);
}

void to_json(json& j, const Certificate& c) {
  j = {{"theorem", c.theorem},
       {"graph6", c.graph6},
       {"m", c.m},
       {"n", c.n},
       {"hypothesis", c.hypothesis},
       {"spectrum_g", c.spectrum_g},
       {"spectrum_a", c.spectrum_a},
       {"spectrum_b", c.spectrum_b},
       {"closed_a", c.closed_a},
       {"closed_b", c.closed_b},
       {"energy_a", c.energy_a},
       {"energy_b", c.energy_b},
       {"energy_delta", c.energy_delta},
       {"equienergetic", c.equienergetic},
       {"cospectral", c.cospectral},
       {"closed_form_agrees", c.closed_form_agrees},
       {"exact_checked", c.exact_checked},
       {"exact_multiplicities_verified", c.exact_multiplicities_verified},
       {"verdict", to_string(c.verdict)},
       {"violation", c.violation()}};
}

void from_json(const json& j, Certificate& c) {
  j.at("theorem").get_to(c.theorem);
  j.at("graph6").get_to(c.graph6);
  j.at("m").get_to(c.m);
  j.at("n").get_to(c.n);
  j.at("hypothesis").get_to(c.hypothesis);
  j.at("spectrum_g").get_to(c.spectrum_g);
  j.at("spectrum_a").get_to(c.spectrum_a);
  j.at("spectrum_b").get_to(c.spectrum_b);
  j.at("closed_a").get_to(c.closed_a);
  j.at("closed_b").get_to(c.closed_b);
  j.at("energy_a").get_to(c.energy_a);
  j.at("energy_b").get_to(c.energy_b);
  j.at("energy_delta").get_to(c.energy_delta);
  j.at("equienergetic").get_to(c.equienergetic);
  j.at("cospectral").get_to(c.cospectral);
  j.at("closed_form_agrees").get_to(c.closed_form_agrees);
  j.at("exact_checked").get_to(c.exact_checked);
  j.at("exact_multiplicities_verified").get_to(c.exact_multiplicities_verified);
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
}

namespace {

json tolerances_json(const Tolerances& t) {
  return {{"num_tol", t.num_tol},       {"zero_tol", t.zero_tol}, {"group_tol", t.group_tol},
          {"energy_tol", t.energy_tol}, {"conv_tol", t.conv_tol}, {"max_sweeps", t.max_sweeps}};
}

Tolerances tolerances_from(const json& j) {
  Tolerances t;
  j.at("num_tol").get_to(t.num_tol);
  j.at("zero_tol").get_to(t.zero_tol);
  j.at("group_tol").get_to(t.group_tol);
  j.at("energy_tol").get_to(t.energy_tol);
  j.at("conv_tol").get_to(t.conv_tol);
  j.at("max_sweeps").get_to(t.max_sweeps);
  return t;
}

}  // namespace

// The worker count is deliberately absent: reports must be byte-identical
// across parallelism settings.
void to_json(json& j, const ScanConfig& c) {
  j = {{"m", c.m},
       {"theorem", c.theorem},
       {"max_order", c.max_order},
       {"exact_verify", c.exact_verify},
       {"exact_max_order", c.exact_max_order},
       {"tolerances", tolerances_json(c.tol)}};
}

void from_json(const json& j, ScanConfig& c) {
  j.at("m").get_to(c.m);
  j.at("theorem").get_to(c.theorem);
  j.at("max_order").get_to(c.max_order);
  j.at("exact_verify").get_to(c.exact_verify);
  j.at("exact_max_order").get_to(c.exact_max_order);
  c.tol = tolerances_from(j.at("tolerances"));
  c.parallelism = 1;
}

void to_json(json& j, const ScanTotals& t) {
  j = {{"scanned", t.scanned},
       {"hypothesis_satisfied", t.hypothesis_satisfied},
       {"certified", t.certified},
       {"refuted", t.refuted},
       {"hypothesis_failed", t.hypothesis_failed},
       {"parse_failed", t.parse_failed},
       {"skipped", t.skipped},
       {"boundary", t.boundary}};
}

void from_json(const json& j, ScanTotals& t) {
  j.at("scanned").get_to(t.scanned);
  j.at("hypothesis_satisfied").get_to(t.hypothesis_satisfied);
  j.at("certified").get_to(t.certified);
  j.at("refuted").get_to(t.refuted);
  j.at("hypothesis_failed").get_to(t.hypothesis_failed);
  j.at("parse_failed").get_to(t.parse_failed);
  j.at("skipped").get_to(t.skipped);
  j.at("boundary").get_to(t.boundary);
}

void to_json(json& j, const LineCertificate& c) { j = {{"line", c.line}, {"certificate", c.certificate}}; }

void from_json(const json& j, LineCertificate& c) {
  j.at("line").get_to(c.line);
  j.at("certificate").get_to(c.certificate);
}

void to_json(json& j, const LineIssue& i) { j = {{"line", i.line}, {"message", i.message}}; }

void from_json(const json& j, LineIssue& i) {
  j.at("line").get_to(i.line);
  j.at("message").get_to(i.message);
}

void to_json(json& j, const PairReport& r) {
  j = {{"config", r.config},
       {"totals", r.totals},
       {"certificates", r.certificates},
       {"failures", r.failures},
       {"skips", r.skips}};
}

void from_json(const json& j, PairReport& r) {
  j.at("config").get_to(r.config);
  j.at("totals").get_to(r.totals);
  j.at("certificates").get_to(r.certificates);
  j.at("failures").get_to(r.failures);
  j.at("skips").get_to(r.skips);
}

}  // namespace seidel
