#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gendiff/measures.h"
#include "gendiff/spectrum.h"

namespace gendiff {

// Value of sum_n |f^(n)|^2 / sum_j |mu_j^(n)|^2. Terms with a positive
// numerator over a vanishing denominator make the series infinite; 0/0 terms
// are skipped.
struct CriterionValue {
  double value = 0.0;
  bool infinite = false;
  // First (lowest) frequency producing an a/0 term when infinite.
  std::optional<std::int64_t> offending_frequency;
};

// Denominators at or below this are structural zeros.
inline constexpr double kZeroDenominator = 1e-24;
// Numerators above this over a structural zero make the series infinite.
inline constexpr double kPositiveNumerator = 1e-18;
// |lambda^(n)| at or below this counts as vanishing when screening shifts.
inline constexpr double kVanishingMultiplier = 1e-12;

struct DecompositionCertificate {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  int s = 1;
  std::vector<double> shifts;
  std::vector<Spectrum> components;
  double residual = 0.0;
  CriterionValue criterion;
};

// |f^(alpha)|, |f^(beta)| <= tol * max(||f||, 1e-300).
bool check_vanishing(const Spectrum& f, std::int64_t alpha, std::int64_t beta,
                     double tol);

// Throws InvalidInput on an empty measure list.
CriterionValue ms_criterion(const Spectrum& f,
                            const std::vector<DiscreteMeasure>& measures);

// Per-frequency minimal-norm solution
//   f_j^(n) = conj(mu_j^(n)) f^(n) / sum_k |mu_k^(n)|^2,
// so that sum_j mu_j * f_j = f and sum_j ||f_j||^2 equals the criterion.
// Throws NotDecomposable (with the first offending frequency) when the
// criterion is infinite.
std::vector<Spectrum> ms_construct(const Spectrum& f,
                                   const std::vector<DiscreteMeasure>& measures);

// Decomposes f = sum_j lambda_{b_j}^s * f_j for the given shifts. The alpha
// and beta coefficients (which pass the vanishing check but may be tiny
// nonzero) are left out of the construction and show up in the residual.
// Throws NotInSubspace or BadShiftSet.
DecompositionCertificate decompose_gd(const Spectrum& f, std::int64_t alpha,
                                      std::int64_t beta, int s,
                                      const std::vector<double>& shifts);

// ||f - sum_j lambda_{b_j}^s * f_j|| rebuilt from the certificate fields.
double recompute_residual(const DecompositionCertificate& cert,
                          const Spectrum& f);

// The measures lambda_{b_j}^s used by a decomposition.
std::vector<DiscreteMeasure> lambda_powers(std::int64_t alpha, std::int64_t beta,
                                           int s,
                                           const std::vector<double>& shifts);

// 4s+1 independent uniform draws in [0, 2pi) from mt19937_64(seed).
std::vector<double> random_shifts(int s, std::uint64_t seed);

}  // namespace gendiff
