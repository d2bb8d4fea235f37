#include "gendiff/spectrum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gendiff/error.h"
#include "int128.h"

namespace gendiff {
namespace {

// e^{sign * 2 pi i j / M} for j = 0..M-1; indexing by (n*k mod M) keeps every
// phase exact to one rounding regardless of n*k.
std::vector<Complex> unit_roots(std::size_t m, double sign) {
  std::vector<Complex> roots(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(m);
    roots[j] = {std::cos(angle), std::sin(angle)};
  }
  return roots;
}

std::size_t residue(std::int64_t n, std::size_t k, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  const std::int64_t r = ((n % mm) + mm) % mm;
  return static_cast<std::size_t>((static_cast<detail::Int128>(r) * k) % m);
}

void check_grid(std::size_t m, std::int64_t band_limit) {
  if (band_limit < 0) {
    throw Error(ErrorCode::kInvalidInput, "band limit must be non-negative");
  }
  if (static_cast<std::int64_t>(m) < 2 * band_limit + 1) {
    throw Error(ErrorCode::kAliasingRisk,
                "grid of " + std::to_string(m) + " points cannot resolve band " +
                    std::to_string(band_limit) + " (need at least " +
                    std::to_string(2 * band_limit + 1) + ")");
  }
}

}  // namespace

Spectrum::Spectrum(std::int64_t band_limit) : band_limit_(band_limit) {
  if (band_limit < 0) {
    throw Error(ErrorCode::kInvalidInput, "band limit must be non-negative");
  }
}

Spectrum::Spectrum(
    std::int64_t band_limit,
    std::initializer_list<std::pair<const std::int64_t, Complex>> coeffs)
    : Spectrum(band_limit) {
  for (const auto& [n, c] : coeffs) set(n, c);
}

Complex Spectrum::operator[](std::int64_t n) const {
  const auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex{} : it->second;
}

void Spectrum::check_frequency(std::int64_t n) const {
  if (n > band_limit_ || n < -band_limit_) {
    throw Error(ErrorCode::kInvalidInput,
                "frequency " + std::to_string(n) + " exceeds band limit " +
                    std::to_string(band_limit_))
        .with_frequency(n);
  }
}

void Spectrum::set(std::int64_t n, Complex value) {
  check_frequency(n);
  coeffs_[n] = value;
}

Spectrum& Spectrum::prune() {
  double total = 0.0;
  double small = 0.0;
  for (const auto& [n, c] : coeffs_) {
    const double sq = std::norm(c);
    total += sq;
    if (std::abs(c) < kPruneThreshold) small += sq;
  }
  const double norm = std::sqrt(total);
  const bool drop_small =
      norm - std::sqrt(std::max(total - small, 0.0)) <= 1e-12 * norm;
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    const Complex c = it->second;
    if (c == Complex{} || (drop_small && std::abs(c) < kPruneThreshold)) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

Spectrum& Spectrum::operator+=(const Spectrum& other) {
  band_limit_ = std::max(band_limit_, other.band_limit_);
  for (const auto& [n, c] : other.coeffs_) coeffs_[n] += c;
  return prune();
}

Spectrum& Spectrum::operator-=(const Spectrum& other) {
  band_limit_ = std::max(band_limit_, other.band_limit_);
  for (const auto& [n, c] : other.coeffs_) coeffs_[n] -= c;
  return prune();
}

Spectrum& Spectrum::operator*=(Complex scale) {
  for (auto& entry : coeffs_) entry.second *= scale;
  return prune();
}

Spectrum analyze(const SampleGrid& grid, std::int64_t band_limit) {
  const std::size_t m = grid.size();
  if (m == 0) throw Error(ErrorCode::kInvalidInput, "empty sample grid");
  check_grid(m, band_limit);
  const auto roots = unit_roots(m, -1.0);
  Spectrum out(band_limit);
  for (std::int64_t n = -band_limit; n <= band_limit; ++n) {
    Complex acc{};
    for (std::size_t k = 0; k < m; ++k) {
      acc += grid.values[k] * roots[residue(n, k, m)];
    }
    out.set(n, acc / static_cast<double>(m));
  }
  out.prune();
  return out;
}

SampleGrid synthesize(const Spectrum& f, std::size_t points) {
  if (points == 0) throw Error(ErrorCode::kInvalidInput, "empty sample grid");
  check_grid(points, f.band_limit());
  const auto roots = unit_roots(points, 1.0);
  SampleGrid grid{std::vector<Complex>(points)};
  for (std::size_t k = 0; k < points; ++k) {
    Complex acc{};
    for (const auto& [n, c] : f.coefficients()) {
      acc += c * roots[residue(n, k, points)];
    }
    grid.values[k] = acc;
  }
  return grid;
}

double l2_norm(const Spectrum& f) {
  double sum = 0.0;
  for (const auto& [n, c] : f.coefficients()) sum += std::norm(c);
  return std::sqrt(sum);
}

double sobolev_energy(const Spectrum& f, int s) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "Sobolev order must be >= 1");
  double sum = 0.0;
  for (const auto& [n, c] : f.coefficients()) {
    sum += std::pow(std::abs(static_cast<double>(n)), 2 * s) * std::norm(c);
  }
  return sum;
}

}  // namespace gendiff
