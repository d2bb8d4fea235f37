#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gendiff/decompose.h"
#include "gendiff/integrals.h"
#include "gendiff/measures.h"
#include "gendiff/sharpness.h"
#include "gendiff/spectrum.h"

namespace gendiff {

// Input that does not match a documented JSON schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"band_limit": N, "coeffs": [{"n": int, "re": float, "im": float}, ...]},
// emitted in ascending n. Duplicate frequencies are rejected on input.
nlohmann::json spectrum_to_json(const Spectrum& f);
Spectrum spectrum_from_json(const nlohmann::json& j);

// {"atoms": [{"x": float, "re": float, "im": float}, ...]}
nlohmann::json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const nlohmann::json& j);

// A bare array of measures, or {"measures": [...]}.
std::vector<DiscreteMeasure> measures_from_json(const nlohmann::json& j);

// {"alpha", "beta", "s", "shifts", "components", "residual",
//  "criterion": float or "inf"}
nlohmann::json certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json criterion_to_json(const CriterionValue& value);

nlohmann::json estimate_to_json(const IntegralEstimate& e);
nlohmann::json constants_to_json(const BoundConstants& k);

// Witness with spectrum, q path, c, phi bits and, when given, the partial-sum
// table of the divergence report.
nlohmann::json witness_to_json(const SharpnessWitness& w,
                               const DivergenceReport* report = nullptr);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gendiff
