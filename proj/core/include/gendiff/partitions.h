#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace gendiff {

// Exact rational multiple of pi, num/den * pi, kept in lowest terms with
// den > 0. All partition breakpoints and sine zeros of the construction are
// of this form, so refinement never compares floating-point values.
class PiFraction {
 public:
  constexpr PiFraction() = default;
  PiFraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const;  // num/den * pi as a double

  friend bool operator==(const PiFraction&, const PiFraction&) = default;
  friend std::strong_ordering operator<=>(const PiFraction& a,
                                          const PiFraction& b);
  friend PiFraction operator-(const PiFraction& a, const PiFraction& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Closed interval [lo, hi] with lo < hi.
struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

// Cells [breakpoints[i], breakpoints[i+1]] covering [front, back]. Storing
// breakpoints rather than intervals makes adjacent cells share exactly one
// point by construction.
class Partition {
 public:
  // Throws InvalidInput unless breakpoints are strictly increasing and there
  // are at least two of them.
  explicit Partition(std::vector<PiFraction> breakpoints);

  const std::vector<PiFraction>& breakpoints() const noexcept {
    return breakpoints_;
  }
  std::size_t cell_count() const noexcept { return breakpoints_.size() - 1; }
  PiFraction lower() const { return breakpoints_.front(); }
  PiFraction upper() const { return breakpoints_.back(); }
  Interval cell(std::size_t i) const;
  PiFraction cell_length(std::size_t i) const;

 private:
  std::vector<PiFraction> breakpoints_;
};

// Provenance (j, k): the cell is R_j intersected with S_k.
struct CellSource {
  std::size_t j;
  std::size_t k;

  friend bool operator==(const CellSource&, const CellSource&) = default;
};

struct RefinedPartition {
  Partition base;
  std::vector<CellSource> provenance;  // one entry per cell of base
};

struct RefinementStats {
  std::size_t count;
  std::int64_t count_bound;  // 2 max{|n-alpha|, |n-beta|}
  double max_length;
  double length_bound;  // min{pi/|n-alpha|, pi/|n-beta|}
  bool count_ok;
  bool length_ok;  // decided exactly on the rational lengths
};

// (r+2)/2 for even r, (r+1)/2 for odd r; r >= 1.
std::int64_t theta(std::int64_t r);

// Zeros c_j = pi j / |n-gamma| of sin((n-gamma)x) on [0, pi/2],
// j = 0..theta(|n-gamma|)-1.
std::vector<PiFraction> sine_zeros_exact(std::int64_t n, std::int64_t gamma);
std::vector<double> sine_zeros(std::int64_t n, std::int64_t gamma);

// The zero-adapted partition P(gamma) of [0, pi/2] with theta(|n-gamma|)
// cells; zero c_j lies in cell j.
Partition partition_gamma(std::int64_t n, std::int64_t gamma);

// Common refinement: all positive-length intersections R_j cap S_k.
// Throws DomainMismatch when the endpoints differ.
RefinedPartition refine(const Partition& p1, const Partition& p2);

// refine(P(alpha), P(beta)) for frequency n.
RefinedPartition refine_for(std::int64_t n, std::int64_t alpha,
                            std::int64_t beta);

RefinementStats refinement_stats(std::int64_t n, std::int64_t alpha,
                                 std::int64_t beta);

// Distance to the nearest integer, in [0, 1/2].
double dist_to_int(double x);

struct SineBoundCheck {
  double lhs;
  double rhs;
  bool holds;
};

// sin^2((n-alpha)x) sin^2((n-beta)x) against
//   16 (n-alpha)^2 (n-beta)^2 / pi^4 * (x - j pi/|n-alpha|)^2 (x - k pi/|n-beta|)^2
// for x in the refinement cell R_j cap S_k, with 1e-12 slack. Throws
// OutOfCell if (j, k) is not a refinement cell or x lies outside it.
SineBoundCheck sine_lower_bound_check(std::int64_t n, std::int64_t alpha,
                                      std::int64_t beta, std::size_t j,
                                      std::size_t k, double x);

// Same check on cell cell_index of a refinement already built by
// refine_for(n, alpha, beta).
SineBoundCheck sine_lower_bound_check(const RefinedPartition& refined,
                                      std::int64_t n, std::int64_t alpha,
                                      std::int64_t beta, std::size_t cell_index,
                                      double x);

// Moves the zero pair into the cell: zeros inside stay, a zero outside is
// replaced by the nearest endpoint. Zeros on the same side outside the cell
// cannot occur for refinement cells and raise StructuralViolation.
std::pair<double, double> snap_zero_pair(const Interval& cell, double a_zero,
                                         double b_zero);

// Checks (x-c)(d-x) >= (x-a)(b-x) >= 0 on a 1000-point grid of [a, b] plus
// its endpoints. Requires c <= a < b <= d (InvalidInput otherwise).
bool quadratic_dominates(double c, double a, double b, double d);

}  // namespace gendiff
