#pragma once

#include <cstdint>
#include <vector>

#include "gendiff/spectrum.h"

namespace gendiff {

struct Atom {
  double x;  // radians, canonical in [0, 2pi)
  Complex weight;
};

// Finite weighted sum of Dirac atoms on the circle, closed under convolution.
// Atoms are sorted by position; atoms closer than kMergeTolerance (including
// across the 0 == 2pi seam) are merged by adding weights, and atoms whose
// weight falls below kWeightFloor are dropped. An empty atom list is the zero
// measure.
class DiscreteMeasure {
 public:
  static constexpr double kMergeTolerance = 1e-12;
  static constexpr double kWeightFloor = 1e-15;

  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_.empty(); }

  // sum_k |w_k|.
  double total_variation() const;

 private:
  std::vector<Atom> atoms_;
};

// x reduced mod 2pi into [0, 2pi); values within the merge tolerance of 2pi
// map to 0.
double canonical_angle(double x);

DiscreteMeasure dirac(double x);

// mu^(n) = sum_k w_k e^{-i n x_k}.
Complex measure_ft(const DiscreteMeasure& mu, std::int64_t n);

DiscreteMeasure convolve_measures(const DiscreteMeasure& mu,
                                  const DiscreteMeasure& nu);

// s-fold convolution power, s >= 1.
DiscreteMeasure measure_power(const DiscreteMeasure& mu, int s);

// The three-atom measure
//   lambda_b = (1/2)(e^{ib(a-b')/2} + e^{-ib(a-b')/2}) delta_0
//              - (1/2)(e^{ib(a+b')/2} delta_b + e^{-ib(a+b')/2} delta_{-b})
// whose transform vanishes at n = alpha and n = beta. The shift b is first
// reduced to [0, 2pi); the half-integer phases use that representative.
DiscreteMeasure lambda_b(std::int64_t alpha, std::int64_t beta, double b);

// Closed form cos((alpha-beta) b/2) - cos((n - (alpha+beta)/2) b). Exactly
// zero at n = alpha and n = beta.
double lambda_ft(std::int64_t alpha, std::int64_t beta, double b,
                 std::int64_t n);

// Coefficient-wise mu^(n) f^(n); the band limit of f is kept.
Spectrum convolve_with_function(const DiscreteMeasure& mu, const Spectrum& f);

}  // namespace gendiff
