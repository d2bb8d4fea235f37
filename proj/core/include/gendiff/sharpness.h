#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gendiff/spectrum.h"

namespace gendiff {

// One branch phi of the binary tree phi(1) in {1, 2},
// phi(l+1) in {2 phi(l) - 1, 2 phi(l)}. Bit l (0-based) selects the second
// option, so phi(l) - 1 is the first l bits read as a binary number.
class PhiPath {
 public:
  PhiPath() = default;
  explicit PhiPath(std::vector<bool> bits) : bits_(std::move(bits)) {}
  static PhiPath from_seed(std::size_t depth, std::uint64_t seed);

  std::size_t depth() const noexcept { return bits_.size(); }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  // phi(level), 1-based level; MagnitudeLimit beyond level 63.
  std::uint64_t value(std::size_t level) const;
  std::string bit_string() const;

 private:
  std::vector<bool> bits_;
};

// How distinct q values are assigned to the levels.
enum class QAssignment {
  // Levels 1, 2, ... each take the smallest unused admissible q; the q path
  // is then strictly increasing.
  kAscending,
  // Levels L, L-1, ... each take the smallest unused admissible q. The
  // admissible sets shrink with the level, so serving the most constrained
  // level first succeeds whenever any distinct assignment below q_cap exists.
  kConstrainedFirst,
};

struct SharpnessWitness {
  std::vector<double> c;  // shift points in [0, 2pi]
  std::int64_t alpha = 0;
  int s = 1;
  std::size_t depth = 0;
  PhiPath path;
  std::vector<std::int64_t> q_path;  // q for level 1..depth
  Spectrum spectrum;                 // coefficient l^{-(1/2+s/m)} at q_l + alpha

  int m() const noexcept { return static_cast<int>(c.size()); }
};

// Smallest q in [q_min, q_max] with d_Z(q c_j) < q^{-1/m} for every j.
// Throws SearchExhausted when none exists in the range.
std::int64_t dirichlet_q(const std::vector<double>& c, std::int64_t q_min,
                         std::int64_t q_max);

// True when d_Z(q c_j / 2pi) < level^{-1/m} for every j.
bool admissible_at_level(const std::vector<double>& c, std::int64_t q,
                         std::int64_t level);

// Builds f_phi truncated at depth = path.depth(). Throws SearchExhausted
// (with the level) when no admissible unused q <= q_cap remains.
SharpnessWitness build_witness(const std::vector<double>& c, std::int64_t alpha,
                               int s, const PhiPath& path, std::int64_t q_cap,
                               QAssignment policy = QAssignment::kAscending);

// Diophantine inequality, distinctness and coefficient law, checked on every
// level.
bool witness_invariants_hold(const SharpnessWitness& w);

struct DivergenceRow {
  std::size_t depth = 0;
  double weighted_sum = 0.0;    // S_L = sum_l l^{2s/m} |f^(q_l + alpha)|^2
  double harmonic_number = 0.0; // H_L summed directly
  double norm_squared = 0.0;    // ||f_phi truncated at L||^2
  double zeta_partial = 0.0;    // sum_{l <= L} l^{-(1 + 2s/m)}
  double criterion = 0.0;       // ms_criterion against lambda_{c_j}^s
  bool criterion_infinite = false;
};

struct DivergenceReport {
  std::int64_t beta = 0;
  std::vector<DivergenceRow> rows;  // ascending depth; last row is the full depth
  // criterion / H_L at the full depth.
  double criterion_to_harmonic = 0.0;
};

// Partial-sum table at depths 1, 2, 5, 10, 20, 50, ... and the full depth.
DivergenceReport divergence_report(const SharpnessWitness& w, std::int64_t beta);

// Criterion of the witness truncated at the given depth (<= w.depth).
double truncated_criterion(const SharpnessWitness& w, std::int64_t beta,
                           std::size_t depth, bool* infinite = nullptr);

}  // namespace gendiff
