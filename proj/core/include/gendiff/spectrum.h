#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace gendiff {

using Complex = std::complex<double>;

// Band-limited function on the circle, stored as its Fourier coefficients
//   f^(n) = (1/2pi) * integral_0^{2pi} f(t) e^{-int} dt,   |n| <= band_limit.
// Frequencies are kept sorted so every summation runs in ascending order.
class Spectrum {
 public:
  // Amplitudes below this modulus are candidates for pruning.
  static constexpr double kPruneThreshold = 1e-15;

  Spectrum() = default;
  explicit Spectrum(std::int64_t band_limit);
  Spectrum(std::int64_t band_limit,
           std::initializer_list<std::pair<const std::int64_t, Complex>> coeffs);

  std::int64_t band_limit() const noexcept { return band_limit_; }
  const std::map<std::int64_t, Complex>& coefficients() const noexcept {
    return coeffs_;
  }
  bool empty() const noexcept { return coeffs_.empty(); }

  // Returns exactly zero for absent frequencies.
  Complex operator[](std::int64_t n) const;

  // Throws InvalidInput when |n| exceeds the band limit.
  void set(std::int64_t n, Complex value);
  void erase(std::int64_t n) { coeffs_.erase(n); }

  // Drops exact zeros always, and amplitudes below kPruneThreshold as long as
  // the L2 norm moves by at most 1e-12 relative.
  Spectrum& prune();

  Spectrum& operator+=(const Spectrum& other);
  Spectrum& operator-=(const Spectrum& other);
  Spectrum& operator*=(Complex scale);

  friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
  friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
  friend Spectrum operator*(Spectrum a, Complex scale) { return a *= scale; }
  friend Spectrum operator*(Complex scale, Spectrum a) { return a *= scale; }

 private:
  void check_frequency(std::int64_t n) const;

  std::int64_t band_limit_ = 0;
  std::map<std::int64_t, Complex> coeffs_;
};

// Samples at the points 2*pi*k/M, k = 0..M-1.
struct SampleGrid {
  std::vector<Complex> values;

  std::size_t size() const noexcept { return values.size(); }
};

// Discrete Fourier coefficients (1/M) sum_k values[k] e^{-in 2pi k/M} for
// |n| <= band_limit. Requires M >= 2*band_limit + 1 (AliasingRisk otherwise).
Spectrum analyze(const SampleGrid& grid, std::int64_t band_limit);

// values[k] = sum_n f^(n) e^{in 2pi k/M}. Requires M >= 2*band_limit + 1.
SampleGrid synthesize(const Spectrum& f, std::size_t points);

double l2_norm(const Spectrum& f);

// sum_n |n|^{2s} |f^(n)|^2 (the Sobolev membership sum, not its root).
double sobolev_energy(const Spectrum& f, int s);

}  // namespace gendiff
