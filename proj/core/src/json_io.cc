#include "gendiff/json_io.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace gendiff {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T number(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw SchemaError(std::string("field '") + key + "' must be a number");
  return v.get<T>();
}

std::int64_t integer(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw SchemaError(std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

const json& array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  return v;
}

}  // namespace

json spectrum_to_json(const Spectrum& f) {
  json coeffs = json::array();
  for (const auto& [n, c] : f.coefficients()) {
    coeffs.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"band_limit", f.band_limit()}, {"coeffs", std::move(coeffs)}};
}

Spectrum spectrum_from_json(const json& j) {
  const std::int64_t band = integer(j, "band_limit");
  if (band < 0) throw SchemaError("band_limit must be non-negative");
  Spectrum f(band);
  std::set<std::int64_t> seen;
  for (const json& entry : array(j, "coeffs")) {
    const std::int64_t n = integer(entry, "n");
    if (!seen.insert(n).second) {
      throw SchemaError("duplicate frequency " + std::to_string(n));
    }
    if (n > band || n < -band) {
      throw SchemaError("frequency " + std::to_string(n) + " exceeds band_limit");
    }
    f.set(n, {number<double>(entry, "re"), number<double>(entry, "im")});
  }
  f.prune();
  return f;
}

json measure_to_json(const DiscreteMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms()) {
    atoms.push_back({{"x", a.x}, {"re", a.weight.real()}, {"im", a.weight.imag()}});
  }
  return {{"atoms", std::move(atoms)}};
}

DiscreteMeasure measure_from_json(const json& j) {
  std::vector<Atom> atoms;
  for (const json& entry : array(j, "atoms")) {
    const double x = number<double>(entry, "x");
    if (!std::isfinite(x)) throw SchemaError("atom position must be finite");
    atoms.push_back({x, {number<double>(entry, "re"), number<double>(entry, "im")}});
  }
  return DiscreteMeasure(std::move(atoms));
}

std::vector<DiscreteMeasure> measures_from_json(const json& j) {
  const json& list = j.is_array() ? j : array(j, "measures");
  std::vector<DiscreteMeasure> out;
  for (const json& entry : list) out.push_back(measure_from_json(entry));
  return out;
}

json criterion_to_json(const CriterionValue& value) {
  if (value.infinite) return "inf";
  return value.value;
}

json certificate_to_json(const DecompositionCertificate& cert) {
  json components = json::array();
  for (const auto& f : cert.components) components.push_back(spectrum_to_json(f));
  return {{"alpha", cert.alpha},
          {"beta", cert.beta},
          {"s", cert.s},
          {"shifts", cert.shifts},
          {"components", std::move(components)},
          {"residual", cert.residual},
          {"criterion", criterion_to_json(cert.criterion)}};
}

DecompositionCertificate certificate_from_json(const json& j) {
  DecompositionCertificate cert;
  cert.alpha = integer(j, "alpha");
  cert.beta = integer(j, "beta");
  cert.s = static_cast<int>(integer(j, "s"));
  for (const json& b : array(j, "shifts")) {
    if (!b.is_number()) throw SchemaError("shifts must be numbers");
    cert.shifts.push_back(b.get<double>());
  }
  for (const json& f : array(j, "components")) {
    cert.components.push_back(spectrum_from_json(f));
  }
  if (cert.components.size() != cert.shifts.size()) {
    throw SchemaError("shifts and components differ in length");
  }
  cert.residual = number<double>(j, "residual");
  const json& crit = field(j, "criterion");
  if (crit.is_string() && crit.get<std::string>() == "inf") {
    cert.criterion.infinite = true;
    cert.criterion.value = std::numeric_limits<double>::infinity();
  } else if (crit.is_number()) {
    cert.criterion.value = crit.get<double>();
  } else {
    throw SchemaError("criterion must be a number or \"inf\"");
  }
  return cert;
}

json estimate_to_json(const IntegralEstimate& e) {
  json out = {{"points", e.points_used},
              {"divergence_risk", e.divergence_risk},
              {"infinite_trend", e.infinite_trend}};
  if (std::isfinite(e.value)) {
    out["value"] = e.value;
    out["std_error"] = e.std_error;
  } else {
    out["value"] = "inf";
    out["std_error"] = "inf";
  }
  return out;
}

json constants_to_json(const BoundConstants& k) {
  return {{"m", k.m}, {"s", k.s}, {"c_m", k.c_m}, {"M", k.m_lemma41}};
}

json witness_to_json(const SharpnessWitness& w, const DivergenceReport* report) {
  json out = {{"c", w.c},
              {"alpha", w.alpha},
              {"s", w.s},
              {"m", w.m()},
              {"depth", w.depth},
              {"phi_bits", w.path.bit_string()},
              {"q_path", w.q_path},
              {"spectrum", spectrum_to_json(w.spectrum)}};
  if (report != nullptr) {
    json rows = json::array();
    for (const auto& r : report->rows) {
      rows.push_back({{"L", r.depth},
                      {"S_L", r.weighted_sum},
                      {"H_L", r.harmonic_number},
                      {"norm_squared", r.norm_squared},
                      {"zeta_partial", r.zeta_partial},
                      {"criterion", r.criterion_infinite ? json("inf") : json(r.criterion)}});
    }
    out["report"] = {{"beta", report->beta},
                     {"criterion_to_harmonic", report->criterion_to_harmonic},
                     {"partial_sums", std::move(rows)}};
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace gendiff
