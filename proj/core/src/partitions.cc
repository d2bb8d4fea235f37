#include "gendiff/partitions.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <string>

#include "gendiff/error.h"
#include "int128.h"

namespace gendiff {
namespace {

constexpr double kSlack = 1e-12;
// Membership slack for points produced from exact breakpoints by rounding.
constexpr double kCellSlack = 1e-14;

std::int64_t distance(std::int64_t n, std::int64_t gamma) {
  if (n == gamma) {
    throw Error(ErrorCode::kDegenerateFrequency,
                "n equals gamma (" + std::to_string(n) + "); sin((n-gamma)x) "
                "has no isolated zeros")
        .with_frequency(n);
  }
  const detail::Int128 d = static_cast<detail::Int128>(n) - gamma;
  const detail::Int128 r = d < 0 ? -d : d;
  if (r > (static_cast<detail::Int128>(1) << 40)) {
    throw Error(ErrorCode::kMagnitudeLimit, "|n - gamma| too large for exact partitions")
        .with_frequency(n);
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

PiFraction::PiFraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double PiFraction::value() const {
  return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

std::strong_ordering operator<=>(const PiFraction& a, const PiFraction& b) {
  const detail::Int128 lhs = static_cast<detail::Int128>(a.num_) * b.den_;
  const detail::Int128 rhs = static_cast<detail::Int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

PiFraction operator-(const PiFraction& a, const PiFraction& b) {
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const detail::Int128 den = static_cast<detail::Int128>(a.den_ / g) * b.den_;
  const detail::Int128 num = static_cast<detail::Int128>(a.num_) * (b.den_ / g) -
                       static_cast<detail::Int128>(b.num_) * (a.den_ / g);
  return PiFraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Partition::Partition(std::vector<PiFraction> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "a partition needs at least one cell");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw Error(ErrorCode::kInvalidInput,
                  "partition breakpoints must be strictly increasing");
    }
  }
}

Interval Partition::cell(std::size_t i) const {
  return {breakpoints_.at(i).value(), breakpoints_.at(i + 1).value()};
}

PiFraction Partition::cell_length(std::size_t i) const {
  return breakpoints_.at(i + 1) - breakpoints_.at(i);
}

std::int64_t theta(std::int64_t r) {
  if (r < 1) throw Error(ErrorCode::kInvalidInput, "theta needs r >= 1");
  return r % 2 == 0 ? (r + 2) / 2 : (r + 1) / 2;
}

std::vector<PiFraction> sine_zeros_exact(std::int64_t n, std::int64_t gamma) {
  const std::int64_t r = distance(n, gamma);
  const std::int64_t count = theta(r);
  std::vector<PiFraction> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  for (std::int64_t j = 0; j < count; ++j) zeros.emplace_back(j, r);
  return zeros;
}

std::vector<double> sine_zeros(std::int64_t n, std::int64_t gamma) {
  std::vector<double> out;
  for (const auto& z : sine_zeros_exact(n, gamma)) out.push_back(z.value());
  return out;
}

Partition partition_gamma(std::int64_t n, std::int64_t gamma) {
  const std::int64_t r = distance(n, gamma);
  const std::int64_t cells = theta(r);
  // 0, then the half-way points (2j+1)/(2r) between consecutive zeros, then
  // 1/2. For odd r the last half-way point is exactly 1/2.
  std::vector<PiFraction> bp;
  bp.reserve(static_cast<std::size_t>(cells + 1));
  bp.emplace_back(0, 1);
  for (std::int64_t j = 0; j + 1 < cells; ++j) bp.emplace_back(2 * j + 1, 2 * r);
  bp.emplace_back(1, 2);
  return Partition(std::move(bp));
}

RefinedPartition refine(const Partition& p1, const Partition& p2) {
  if (p1.lower() != p2.lower() || p1.upper() != p2.upper()) {
    throw Error(ErrorCode::kDomainMismatch,
                "partitions cover different intervals");
  }
  const auto& r = p1.breakpoints();
  const auto& s = p2.breakpoints();
  std::vector<PiFraction> merged;
  std::vector<CellSource> provenance;
  merged.reserve(r.size() + s.size());
  merged.push_back(r.front());
  std::size_t j = 0;
  std::size_t k = 0;
  // Sweep: the next cell ends at the nearer of the two right endpoints.
  while (j + 1 < r.size() && k + 1 < s.size()) {
    const PiFraction& rj = r[j + 1];
    const PiFraction& sk = s[k + 1];
    provenance.push_back({j, k});
    if (rj < sk) {
      merged.push_back(rj);
      ++j;
    } else if (sk < rj) {
      merged.push_back(sk);
      ++k;
    } else {
      merged.push_back(rj);
      ++j;
      ++k;
    }
  }
  return {Partition(std::move(merged)), std::move(provenance)};
}

RefinedPartition refine_for(std::int64_t n, std::int64_t alpha,
                            std::int64_t beta) {
  return refine(partition_gamma(n, alpha), partition_gamma(n, beta));
}

RefinementStats refinement_stats(std::int64_t n, std::int64_t alpha,
                                  std::int64_t beta) {
  const std::int64_t ra = distance(n, alpha);
  const std::int64_t rb = distance(n, beta);
  const RefinedPartition refined = refine_for(n, alpha, beta);
  const PiFraction exact_bound(1, std::max(ra, rb));

  RefinementStats stats{};
  stats.count = refined.base.cell_count();
  stats.count_bound = 2 * std::max(ra, rb);
  stats.length_bound = exact_bound.value();
  PiFraction longest(0, 1);
  for (std::size_t i = 0; i < stats.count; ++i) {
    longest = std::max(longest, refined.base.cell_length(i));
  }
  stats.max_length = longest.value();
  stats.count_ok = static_cast<std::int64_t>(stats.count) <= stats.count_bound;
  stats.length_ok = longest <= exact_bound;
  return stats;
}

double dist_to_int(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kInvalidInput, "x must be finite");
  return std::abs(x - std::nearbyint(x));
}

SineBoundCheck sine_lower_bound_check(std::int64_t n, std::int64_t alpha,
                                      std::int64_t beta, std::size_t j,
                                      std::size_t k, double x) {
  const RefinedPartition refined = refine_for(n, alpha, beta);
  const auto it = std::find(refined.provenance.begin(), refined.provenance.end(),
                            CellSource{j, k});
  if (it == refined.provenance.end()) {
    throw Error(ErrorCode::kOutOfCell,
                "(" + std::to_string(j) + ", " + std::to_string(k) +
                    ") is not a cell of the refinement");
  }
  return sine_lower_bound_check(
      refined, n, alpha, beta,
      static_cast<std::size_t>(it - refined.provenance.begin()), x);
}

SineBoundCheck sine_lower_bound_check(const RefinedPartition& refined,
                                      std::int64_t n, std::int64_t alpha,
                                      std::int64_t beta, std::size_t cell_index,
                                      double x) {
  if (cell_index >= refined.provenance.size()) {
    throw Error(ErrorCode::kOutOfCell,
                "cell " + std::to_string(cell_index) + " does not exist");
  }
  const Interval cell = refined.base.cell(cell_index);
  if (x < cell.lo - kCellSlack || x > cell.hi + kCellSlack) {
    throw Error(ErrorCode::kOutOfCell, "x = " + std::to_string(x) +
                                           " lies outside the cell");
  }
  const auto [j, k] = refined.provenance[cell_index];
  const double da = static_cast<double>(n - alpha);
  const double db = static_cast<double>(n - beta);
  const double sa = std::sin(da * x);
  const double sb = std::sin(db * x);
  const double lhs = sa * sa * sb * sb;
  const double za = x - static_cast<double>(j) * std::numbers::pi / std::abs(da);
  const double zb = x - static_cast<double>(k) * std::numbers::pi / std::abs(db);
  constexpr double kPi4 = std::numbers::pi * std::numbers::pi * std::numbers::pi *
                          std::numbers::pi;
  const double rhs = 16.0 * da * da * db * db / kPi4 * za * za * zb * zb;
  return {lhs, rhs, lhs >= rhs - kSlack};
}

std::pair<double, double> snap_zero_pair(const Interval& cell, double a_zero,
                                         double b_zero) {
  if (!(cell.lo < cell.hi)) {
    throw Error(ErrorCode::kInvalidInput, "cell must have positive length");
  }
  // -1: left of the cell, 0: inside, +1: right of the cell.
  const auto side = [&](double z) {
    if (z < cell.lo - kCellSlack) return -1;
    if (z > cell.hi + kCellSlack) return 1;
    return 0;
  };
  const auto snap = [&](double z, int where) {
    if (where < 0) return cell.lo;
    if (where > 0) return cell.hi;
    return std::clamp(z, cell.lo, cell.hi);
  };
  const int sa = side(a_zero);
  const int sb = side(b_zero);
  if (sa != 0 && sa == sb) {
    throw Error(ErrorCode::kStructuralViolation,
                "both zeros lie on the same side of the cell");
  }
  return {snap(a_zero, sa), snap(b_zero, sb)};
}

bool quadratic_dominates(double c, double a, double b, double d) {
  if (!(c <= a && a < b && b <= d)) {
    throw Error(ErrorCode::kInvalidInput, "requires c <= a < b <= d");
  }
  constexpr int kGrid = 1000;
  const double scale = std::max(1.0, (d - c) * (d - c));
  for (int i = 0; i <= kGrid; ++i) {
    const double x = i == kGrid ? b : a + (b - a) * i / kGrid;
    const double outer = (x - c) * (d - x);
    const double inner = (x - a) * (b - x);
    if (outer < inner - kSlack * scale || inner < -kSlack * scale) return false;
  }
  return true;
}

}  // namespace gendiff
