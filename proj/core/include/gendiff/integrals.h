#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gendiff/partitions.h"

namespace gendiff {

enum class Scheme { kPlainMonteCarlo, kLatticeShifted };

std::string_view scheme_name(Scheme scheme);
// Accepts "plain_monte_carlo" / "plain" and "lattice_shifted" / "lattice".
Scheme parse_scheme(std::string_view text);

struct McConfig {
  std::uint64_t points = 1 << 14;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::kLatticeShifted;
  double epsilon = 0.0;  // added to every denominator
};

struct IntegralEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t points_used = 0;
  // epsilon == 0 and the integral is not guaranteed finite.
  bool divergence_risk = false;
  // Some sample hit a zero denominator (value is then +inf).
  bool infinite_trend = false;
};

// Number of random shifts of the lattice rule; their spread is the error.
inline constexpr int kLatticeShifts = 8;
// Largest supported dimension of the lattice generating vector.
inline constexpr int kMaxLatticeDimension = 9;

// Integral over [0, 2pi]^m of
//   1 / (sum_j |cos((alpha-beta) x_j/2) - cos((n-(alpha+beta)/2) x_j)|^{2s} + eps).
IntegralEstimate estimate_lhs(std::int64_t n, std::int64_t alpha,
                              std::int64_t beta, int s, int m,
                              const McConfig& cfg);

// Integral over [0, pi/2]^m of
//   1 / (sum_j sin^{2s}((n-alpha) x_j) sin^{2s}((n-beta) x_j) + eps).
IntegralEstimate estimate_rhs(std::int64_t n, std::int64_t alpha,
                              std::int64_t beta, int s, int m,
                              const McConfig& cfg);

// Regularized folding identity LHS_eps = 2^{2m-2s} RHS_{eps/2^{2s}}, both
// sides by deterministic tensor quadrature (periodic trapezoid for the
// [0, 2pi]^m side, composite 8-point Gauss-Legendre for the [0, pi/2]^m
// side). Returns |LHS - 2^{2m-2s} RHS| / LHS. Requires eps > 0, m in {1, 2}.
double folding_identity_check(std::int64_t n, std::int64_t alpha,
                              std::int64_t beta, int s, int m, double epsilon,
                              int quad_points);

struct BoundScanRow {
  std::int64_t n = 0;
  bool skipped = false;  // n in {alpha, beta}
  std::uint64_t seed = 0;
  IntegralEstimate estimate;
};

// estimate_lhs with m = 4s+1 for every n in [n_min, n_max]. Each row uses
// seed derive_seed(cfg.seed, n), so rows do not depend on evaluation order;
// rows are returned in ascending n and computed in parallel.
std::vector<BoundScanRow> uniform_bound_scan(std::int64_t alpha,
                                             std::int64_t beta, int s,
                                             std::int64_t n_min,
                                             std::int64_t n_max,
                                             const McConfig& cfg);

struct BoundConstants {
  double c_m;        // m^{1-2s}
  double m_lemma41;  // C_m^{-1} 2^{m+1} pi^{m/2} m^{(m-4s)/2} / ((m-4s) Gamma(m/2))
  int m;
  int s;
};

// Gamma(m/2) by the half-integer recurrence from Gamma(1/2) and Gamma(1).
double gamma_half_integer(int m);

// Requires m >= 4s+1 (InvalidInput otherwise).
BoundConstants lemma41_constants(int m, int s);

struct JCellResult {
  IntegralEstimate estimate;      // with zeros snapped into the cells
  IntegralEstimate raw_estimate;  // with the original zeros a_j, b_k
  double bound = 0.0;             // pi^{m-4s} M / max{|n-alpha|,|n-beta|}^{m-4s}
  bool within = false;            // estimate <= bound (1 + 3 relative std error)
};

// J-integral over the product of the refinement cells (j_t, k_t) of
//   1 / sum_t (x_t - a_t)^{2s} (x_t - b_t)^{2s}   (+ eps),
// m = cells.size() >= 4s+1. Throws StructuralViolation when a pair is not a
// cell of the refinement for (n, alpha, beta).
JCellResult estimate_J_cell(std::int64_t n, std::int64_t alpha,
                            std::int64_t beta, int s,
                            const std::vector<CellSource>& cells,
                            const McConfig& cfg);

}  // namespace gendiff
