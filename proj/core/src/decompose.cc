#include "gendiff/decompose.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gendiff/error.h"
#include "gendiff/random.h"

namespace gendiff {
namespace {

void require_measures(const std::vector<DiscreteMeasure>& measures) {
  if (measures.empty()) {
    throw Error(ErrorCode::kInvalidInput, "at least one measure is required");
  }
}

double squared_multiplier(const std::vector<DiscreteMeasure>& measures,
                          std::int64_t n) {
  double sum = 0.0;
  for (const auto& mu : measures) sum += std::norm(measure_ft(mu, n));
  return sum;
}

}  // namespace

bool check_vanishing(const Spectrum& f, std::int64_t alpha, std::int64_t beta,
                     double tol) {
  const double limit = tol * std::max(l2_norm(f), 1e-300);
  return std::abs(f[alpha]) <= limit && std::abs(f[beta]) <= limit;
}

CriterionValue ms_criterion(const Spectrum& f,
                            const std::vector<DiscreteMeasure>& measures) {
  require_measures(measures);
  CriterionValue out;
  for (const auto& [n, c] : f.coefficients()) {
    const double numerator = std::norm(c);
    const double denominator = squared_multiplier(measures, n);
    if (denominator <= kZeroDenominator) {
      if (numerator > kPositiveNumerator && !out.infinite) {
        out.infinite = true;
        out.offending_frequency = n;
      }
      continue;
    }
    out.value += numerator / denominator;
  }
  if (out.infinite) out.value = std::numeric_limits<double>::infinity();
  return out;
}

std::vector<Spectrum> ms_construct(const Spectrum& f,
                                   const std::vector<DiscreteMeasure>& measures) {
  require_measures(measures);
  std::vector<Spectrum> components(measures.size(), Spectrum(f.band_limit()));
  std::vector<Complex> transforms(measures.size());
  for (const auto& [n, c] : f.coefficients()) {
    double denominator = 0.0;
    for (std::size_t j = 0; j < measures.size(); ++j) {
      transforms[j] = measure_ft(measures[j], n);
      denominator += std::norm(transforms[j]);
    }
    if (denominator <= kZeroDenominator) {
      if (std::norm(c) > kPositiveNumerator) {
        throw Error(ErrorCode::kNotDecomposable,
                    "criterion series is infinite: multipliers vanish at "
                    "frequency " + std::to_string(n))
            .with_frequency(n);
      }
      continue;
    }
    for (std::size_t j = 0; j < measures.size(); ++j) {
      components[j].set(n, std::conj(transforms[j]) * c / denominator);
    }
  }
  for (auto& component : components) component.prune();
  return components;
}

std::vector<DiscreteMeasure> lambda_powers(std::int64_t alpha, std::int64_t beta,
                                           int s,
                                           const std::vector<double>& shifts) {
  std::vector<DiscreteMeasure> measures;
  measures.reserve(shifts.size());
  for (const double b : shifts) {
    measures.push_back(measure_power(lambda_b(alpha, beta, b), s));
  }
  return measures;
}

DecompositionCertificate decompose_gd(const Spectrum& f, std::int64_t alpha,
                                      std::int64_t beta, int s,
                                      const std::vector<double>& shifts) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "s must be >= 1");
  if (shifts.empty()) {
    throw Error(ErrorCode::kInvalidInput, "at least one shift is required");
  }
  if (!check_vanishing(f, alpha, beta, 1e-9)) {
    const std::int64_t bad =
        std::abs(f[alpha]) >= std::abs(f[beta]) ? alpha : beta;
    throw Error(ErrorCode::kNotInSubspace,
                "f does not vanish at frequency " + std::to_string(bad))
        .with_frequency(bad);
  }

  Spectrum target = f;
  target.erase(alpha);
  target.erase(beta);

  DecompositionCertificate cert;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.s = s;
  for (const double b : shifts) cert.shifts.push_back(canonical_angle(b));

  for (const auto& [n, c] : target.coefficients()) {
    bool all_vanish = true;
    for (const double b : cert.shifts) {
      if (std::abs(lambda_ft(alpha, beta, b, n)) > kVanishingMultiplier) {
        all_vanish = false;
        break;
      }
    }
    if (all_vanish) {
      throw Error(ErrorCode::kBadShiftSet,
                  "every lambda_b vanishes at frequency " + std::to_string(n) +
                      "; resample the shifts")
          .with_frequency(n);
    }
  }

  const auto measures = lambda_powers(alpha, beta, s, cert.shifts);
  cert.criterion = ms_criterion(target, measures);
  if (cert.criterion.infinite) {
    throw Error(ErrorCode::kBadShiftSet,
                "criterion series is infinite at frequency " +
                    std::to_string(*cert.criterion.offending_frequency) +
                    "; resample the shifts")
        .with_frequency(*cert.criterion.offending_frequency);
  }
  cert.components = ms_construct(target, measures);
  cert.residual = recompute_residual(cert, f);
  return cert;
}

double recompute_residual(const DecompositionCertificate& cert,
                          const Spectrum& f) {
  const auto measures = lambda_powers(cert.alpha, cert.beta, cert.s, cert.shifts);
  Spectrum rebuilt(f.band_limit());
  for (std::size_t j = 0; j < measures.size() && j < cert.components.size(); ++j) {
    rebuilt += convolve_with_function(measures[j], cert.components[j]);
  }
  return l2_norm(f - rebuilt);
}

std::vector<double> random_shifts(int s, std::uint64_t seed) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "s must be >= 1");
  Engine engine(seed);
  std::vector<double> shifts(static_cast<std::size_t>(4 * s + 1));
  for (auto& b : shifts) b = 2.0 * std::numbers::pi * uniform01(engine);
  return shifts;
}

}  // namespace gendiff
