#pragma once

// JSON forms of the library's value types. Key names are part of the stable
// output schema documented in README.md.

#include <json.hpp>

#include "seidel/charpoly.hpp"
#include "seidel/search.hpp"
#include "seidel/spectral.hpp"
#include "seidel/theory.hpp"

namespace seidel {

void to_json(nlohmann::json& j, const EigenGroup& g);
void from_json(const nlohmann::json& j, EigenGroup& g);
void to_json(nlohmann::json& j, const Spectrum& s);
void from_json(const nlohmann::json& j, Spectrum& s);
void to_json(nlohmann::json& j, const Inertia& i);
void from_json(const nlohmann::json& j, Inertia& i);
void to_json(nlohmann::json& j, const IntPolynomial& p);
void to_json(nlohmann::json& j, const Padding& p);
void from_json(const nlohmann::json& j, Padding& p);
void to_json(nlohmann::json& j, const ClosedFormSpectrum& c);
void from_json(const nlohmann::json& j, ClosedFormSpectrum& c);
void to_json(nlohmann::json& j, const HypothesisReport& h);
void from_json(const nlohmann::json& j, HypothesisReport& h);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const ScanConfig& c);
void from_json(const nlohmann::json& j, ScanConfig& c);
void to_json(nlohmann::json& j, const ScanTotals& t);
void from_json(const nlohmann::json& j, ScanTotals& t);
void to_json(nlohmann::json& j, const LineCertificate& c);
void from_json(const nlohmann::json& j, LineCertificate& c);
void to_json(nlohmann::json& j, const LineIssue& i);
void from_json(const nlohmann::json& j, LineIssue& i);
void to_json(nlohmann::json& j, const PairReport& r);
void from_json(const nlohmann::json& j, PairReport& r);

}  // namespace seidel
