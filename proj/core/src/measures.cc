#include "gendiff/measures.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gendiff/error.h"

namespace gendiff {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::kInvalidInput, "atom position must be finite");
  }
}

}  // namespace

double canonical_angle(double x) {
  require_finite(x);
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - DiscreteMeasure::kMergeTolerance) r = 0.0;
  return r;
}

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  for (auto& atom : atoms) atom.x = canonical_angle(atom.x);
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.x < b.x; });
  std::vector<Atom> merged;
  merged.reserve(atoms.size());
  for (const auto& atom : atoms) {
    if (!merged.empty() && atom.x - merged.back().x < kMergeTolerance) {
      merged.back().weight += atom.weight;
    } else {
      merged.push_back(atom);
    }
  }
  // Seam: an atom just below 2pi coincides with one at 0.
  if (merged.size() > 1 &&
      kTwoPi - merged.back().x + merged.front().x < kMergeTolerance) {
    merged.front().weight += merged.back().weight;
    merged.pop_back();
  }
  std::erase_if(merged,
                [](const Atom& a) { return std::abs(a.weight) < kWeightFloor; });
  atoms_ = std::move(merged);
}

double DiscreteMeasure::total_variation() const {
  double sum = 0.0;
  for (const auto& atom : atoms_) sum += std::abs(atom.weight);
  return sum;
}

DiscreteMeasure dirac(double x) {
  require_finite(x);
  return DiscreteMeasure({{x, Complex{1.0, 0.0}}});
}

Complex measure_ft(const DiscreteMeasure& mu, std::int64_t n) {
  Complex acc{};
  for (const auto& atom : mu.atoms()) {
    // Reduce the phase before evaluating so large |n| stays accurate.
    const double phase = std::fmod(static_cast<double>(n) * atom.x, kTwoPi);
    acc += atom.weight * Complex{std::cos(phase), -std::sin(phase)};
  }
  return acc;
}

DiscreteMeasure convolve_measures(const DiscreteMeasure& mu,
                                  const DiscreteMeasure& nu) {
  std::vector<Atom> atoms;
  atoms.reserve(mu.atoms().size() * nu.atoms().size());
  for (const auto& a : mu.atoms()) {
    for (const auto& b : nu.atoms()) {
      atoms.push_back({a.x + b.x, a.weight * b.weight});
    }
  }
  return DiscreteMeasure(std::move(atoms));
}

DiscreteMeasure measure_power(const DiscreteMeasure& mu, int s) {
  if (s < 1) {
    throw Error(ErrorCode::kInvalidInput,
                "convolution power must be >= 1; use dirac(0) for the identity");
  }
  DiscreteMeasure result = mu;
  for (int i = 1; i < s; ++i) result = convolve_measures(result, mu);
  return result;
}

DiscreteMeasure lambda_b(std::int64_t alpha, std::int64_t beta, double b) {
  const double t = canonical_angle(b);
  const double half_diff = static_cast<double>(alpha - beta) / 2.0;
  const double half_sum = static_cast<double>(alpha + beta) / 2.0;
  const Complex i{0.0, 1.0};
  const Complex center =
      0.5 * (std::exp(i * (t * half_diff)) + std::exp(-i * (t * half_diff)));
  const Complex plus = -0.5 * std::exp(i * (t * half_sum));
  const Complex minus = -0.5 * std::exp(-i * (t * half_sum));
  return DiscreteMeasure({{0.0, center}, {t, plus}, {kTwoPi - t, minus}});
}

double lambda_ft(std::int64_t alpha, std::int64_t beta, double b,
                 std::int64_t n) {
  // |.| on both frequencies so n = beta reproduces the n = alpha argument
  // bit for bit and the difference is exactly zero.
  const double t = canonical_angle(b);
  const double k0 = std::abs(static_cast<double>(alpha - beta) / 2.0);
  const double k1 = std::abs(static_cast<double>(n) -
                             static_cast<double>(alpha + beta) / 2.0);
  return std::cos(k0 * t) - std::cos(k1 * t);
}

Spectrum convolve_with_function(const DiscreteMeasure& mu, const Spectrum& f) {
  Spectrum out(f.band_limit());
  for (const auto& [n, c] : f.coefficients()) out.set(n, measure_ft(mu, n) * c);
  out.prune();
  return out;
}

}  // namespace gendiff
