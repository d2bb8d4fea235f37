#include "gendiff/json_io.h"

#include <gtest/gtest.h>

#include "gendiff/decompose.h"
#include "oracles.h"

namespace gendiff {
namespace {

using nlohmann::json;

TEST(SpectrumJson, RoundTripAndOrder) {
  auto f = oracle::random_spectrum(5, 3);
  const json j = spectrum_to_json(f);
  EXPECT_EQ(j["band_limit"], 5);
  std::int64_t last = -100;
  for (const auto& c : j["coeffs"]) {
    EXPECT_GT(c["n"].get<std::int64_t>(), last);
    last = c["n"];
  }
  auto back = spectrum_from_json(json::parse(j.dump()));
  EXPECT_EQ(oracle::max_abs_diff(back, f), 0.0);
}

TEST(SpectrumJson, UnorderedInputAccepted) {
  auto f = spectrum_from_json(json::parse(
      R"({"band_limit": 3, "coeffs": [{"n": 3, "re": 1, "im": 0}, {"n": -2, "re": 0, "im": 2}]})"));
  EXPECT_EQ(f[3], Complex(1.0));
  EXPECT_EQ(f[-2], Complex(0.0, 2.0));
}

TEST(SpectrumJson, Rejections) {
  EXPECT_THROW(spectrum_from_json(json::parse(
                   R"({"band_limit": 3, "coeffs": [{"n": 1, "re": 1, "im": 0}, {"n": 1, "re": 0, "im": 1}]})")),
               SchemaError);
  EXPECT_THROW(spectrum_from_json(json::parse(R"({"band_limit": 1, "coeffs": [{"n": 2, "re": 1, "im": 0}]})")),
               SchemaError);
  EXPECT_THROW(spectrum_from_json(json::parse(R"({"coeffs": []})")), SchemaError);
  EXPECT_THROW(spectrum_from_json(json::parse(R"({"band_limit": 2, "coeffs": [{"n": 1.5, "re": 1, "im": 0}]})")),
               SchemaError);
}

TEST(MeasureJson, RoundTrip) {
  auto mu = lambda_b(2, -1, 0.8);
  auto back = measure_from_json(json::parse(measure_to_json(mu).dump()));
  ASSERT_EQ(back.atoms().size(), mu.atoms().size());
  for (std::size_t i = 0; i < mu.atoms().size(); ++i) {
    EXPECT_EQ(back.atoms()[i].x, mu.atoms()[i].x);
    EXPECT_EQ(back.atoms()[i].weight, mu.atoms()[i].weight);
  }
  auto list = measures_from_json(json::parse(R"({"measures": [{"atoms": []}, {"atoms": [{"x": 1, "re": 1, "im": 0}]}]})"));
  ASSERT_EQ(list.size(), 2u);
  EXPECT_TRUE(list[0].is_zero());
}

TEST(CertificateJson, RoundTrip) {
  auto f = oracle::random_spectrum(6, 1, {1, -1});
  auto cert = decompose_gd(f, 1, -1, 1, random_shifts(1, 1));
  const json j = certificate_to_json(cert);
  for (const char* key : {"alpha", "beta", "s", "shifts", "components", "residual", "criterion"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  auto back = certificate_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.shifts, cert.shifts);
  EXPECT_EQ(back.residual, cert.residual);
  EXPECT_EQ(back.criterion.value, cert.criterion.value);
  EXPECT_LE(recompute_residual(back, f), cert.residual + 1e-12);
}

TEST(CertificateJson, InfiniteCriterion) {
  CriterionValue v;
  v.infinite = true;
  EXPECT_EQ(criterion_to_json(v), "inf");
  json j = certificate_to_json(DecompositionCertificate{});
  j["criterion"] = "inf";
  EXPECT_TRUE(certificate_from_json(j).criterion.infinite);
  j["criterion"] = "big";
  EXPECT_THROW(certificate_from_json(j), SchemaError);
}

}  // namespace
}  // namespace gendiff
