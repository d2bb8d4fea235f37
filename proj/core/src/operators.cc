#include "gendiff/operators.h"

#include <cmath>
#include <string>

#include "gendiff/error.h"
#include "int128.h"

namespace gendiff {
namespace {

constexpr detail::Int128 kMagnitudeLimit = static_cast<detail::Int128>(1) << 62;

void check_order(int s) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "operator order s must be >= 1");
}

}  // namespace

std::int64_t symbol_value(const QuadraticSymbol& sym, std::int64_t n) {
  check_order(sym.s);
  const detail::Int128 a = static_cast<detail::Int128>(n) - sym.alpha;
  const detail::Int128 b = static_cast<detail::Int128>(n) - sym.beta;
  const detail::Int128 factor = a * b;
  const detail::Int128 magnitude = factor < 0 ? -factor : factor;
  if (magnitude == 0) return 0;
  detail::Int128 value = 1;
  for (int i = 0; i < sym.s; ++i) {
    // |value| * |factor| > 2^62  <=>  |value| > 2^62 / |factor|.
    if (magnitude > kMagnitudeLimit || (value < 0 ? -value : value) > kMagnitudeLimit / magnitude) {
      throw Error(ErrorCode::kMagnitudeLimit,
                  "symbol value at n=" + std::to_string(n) + " exceeds 2^62")
          .with_frequency(n);
    }
    value *= -factor;
  }
  return static_cast<std::int64_t>(value);
}

Spectrum apply_derivative(const Spectrum& f, int s) {
  check_order(s);
  // i^s cycles through 1, i, -1, -i.
  static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex unit = kPowersOfI[s % 4];
  Spectrum out(f.band_limit());
  for (const auto& [n, c] : f.coefficients()) {
    out.set(n, unit * std::pow(static_cast<double>(n), s) * c);
  }
  out.prune();
  return out;
}

Spectrum apply_quadratic(const QuadraticSymbol& sym, const Spectrum& g) {
  Spectrum out(g.band_limit());
  for (const auto& [n, c] : g.coefficients()) {
    out.set(n, static_cast<double>(symbol_value(sym, n)) * c);
  }
  out.prune();
  return out;
}

Spectrum solve_quadratic(const QuadraticSymbol& sym, const Spectrum& f,
                         double tol) {
  check_order(sym.s);
  const double limit = tol * l2_norm(f);
  for (const std::int64_t zero : {sym.alpha, sym.beta}) {
    const double magnitude = std::abs(f[zero]);
    if (magnitude > limit) {
      throw Error(ErrorCode::kNotInRange,
                  "coefficient at frequency " + std::to_string(zero) +
                      " has modulus " + std::to_string(magnitude) +
                      ", above the range tolerance")
          .with_frequency(zero);
    }
  }
  Spectrum g(f.band_limit());
  for (const auto& [n, c] : f.coefficients()) {
    if (n == sym.alpha || n == sym.beta) continue;
    g.set(n, c / static_cast<double>(symbol_value(sym, n)));
  }
  g.prune();
  return g;
}

}  // namespace gendiff
