#pragma once

#include <cstdint>

#include "gendiff/spectrum.h"

namespace gendiff {

// Symbol of (D^2 - i(alpha+beta)D - alpha*beta I)^s, namely
// (-1)^s (n-alpha)^s (n-beta)^s, which vanishes exactly at alpha and beta.
struct QuadraticSymbol {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  int s = 1;
};

inline constexpr double kDefaultRangeTolerance = 1e-9;

// Exact integer value; MagnitudeLimit once |(n-alpha)^s (n-beta)^s| > 2^62.
std::int64_t symbol_value(const QuadraticSymbol& sym, std::int64_t n);

// Multiplies each coefficient by (in)^s.
Spectrum apply_derivative(const Spectrum& f, int s);

Spectrum apply_quadratic(const QuadraticSymbol& sym, const Spectrum& g);

// Pseudo-inverse on the range: g^(n) = f^(n) / symbol(n), with
// g^(alpha) = g^(beta) = 0. Throws NotInRange (carrying the frequency) when
// |f^(alpha)| or |f^(beta)| exceeds tol * ||f||.
Spectrum solve_quadratic(const QuadraticSymbol& sym, const Spectrum& f,
                         double tol = kDefaultRangeTolerance);

}  // namespace gendiff
