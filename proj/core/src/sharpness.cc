#include "gendiff/sharpness.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "gendiff/decompose.h"
#include "gendiff/error.h"
#include "gendiff/measures.h"
#include "gendiff/partitions.h"
#include "gendiff/random.h"

namespace gendiff {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_distance(const std::vector<double>& targets, std::int64_t q) {
  double worst = 0.0;
  for (const double t : targets) {
    worst = std::max(worst, dist_to_int(static_cast<double>(q) * t));
  }
  return worst;
}

std::vector<double> rescaled(const std::vector<double>& c) {
  std::vector<double> out;
  out.reserve(c.size());
  for (const double cj : c) out.push_back(cj / kTwoPi);
  return out;
}

double level_threshold(std::int64_t level, int m) {
  return std::pow(static_cast<double>(level), -1.0 / m);
}

Error exhausted(std::int64_t level, std::int64_t q_cap) {
  Error e(ErrorCode::kSearchExhausted,
          "no admissible unused q <= " + std::to_string(q_cap) + " at level " +
              std::to_string(level) + "; raise q_cap");
  e.with_level(level);
  return e;
}

void check_shifts(const std::vector<double>& c) {
  if (c.empty()) throw Error(ErrorCode::kInvalidInput, "need at least one shift point");
  for (const double cj : c) {
    if (!(cj >= 0.0 && cj <= kTwoPi)) {
      throw Error(ErrorCode::kInvalidInput, "shift points must lie in [0, 2pi]");
    }
  }
}

double coefficient(std::size_t level, int s, int m) {
  return std::pow(static_cast<double>(level), -(0.5 + static_cast<double>(s) / m));
}

}  // namespace

PhiPath PhiPath::from_seed(std::size_t depth, std::uint64_t seed) {
  Engine engine(seed);
  std::vector<bool> bits(depth);
  for (std::size_t i = 0; i < depth; ++i) bits[i] = (engine() >> 63) != 0;
  return PhiPath(std::move(bits));
}

std::uint64_t PhiPath::value(std::size_t level) const {
  if (level < 1 || level > bits_.size()) {
    throw Error(ErrorCode::kInvalidInput, "level out of range");
  }
  if (level > 63) {
    throw Error(ErrorCode::kMagnitudeLimit, "phi(level) exceeds 64 bits")
        .with_level(static_cast<std::int64_t>(level));
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < level; ++i) v = 2 * v + (bits_[i] ? 1 : 0);
  return v + 1;
}

std::string PhiPath::bit_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (const bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::int64_t dirichlet_q(const std::vector<double>& c, std::int64_t q_min,
                         std::int64_t q_max) {
  if (c.empty()) throw Error(ErrorCode::kInvalidInput, "need at least one target");
  if (q_min < 1 || q_max < q_min) {
    throw Error(ErrorCode::kInvalidInput, "need 1 <= q_min <= q_max");
  }
  const int m = static_cast<int>(c.size());
  for (std::int64_t q = q_min; q <= q_max; ++q) {
    if (max_distance(c, q) < level_threshold(q, m)) return q;
  }
  throw Error(ErrorCode::kSearchExhausted,
              "no q in [" + std::to_string(q_min) + ", " + std::to_string(q_max) +
                  "] satisfies the simultaneous approximation bound");
}

bool admissible_at_level(const std::vector<double>& c, std::int64_t q,
                         std::int64_t level) {
  return max_distance(rescaled(c), q) < level_threshold(level, static_cast<int>(c.size()));
}

SharpnessWitness build_witness(const std::vector<double>& c, std::int64_t alpha,
                               int s, const PhiPath& path, std::int64_t q_cap,
                               QAssignment policy) {
  check_shifts(c);
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "s must be >= 1");
  if (q_cap < 1) throw Error(ErrorCode::kInvalidInput, "q_cap must be >= 1");
  const int m = static_cast<int>(c.size());
  const auto depth = static_cast<std::int64_t>(path.depth());
  const auto targets = rescaled(c);

  SharpnessWitness w;
  w.c = c;
  w.alpha = alpha;
  w.s = s;
  w.depth = path.depth();
  w.path = path;
  w.q_path.assign(path.depth(), 0);

  if (policy == QAssignment::kAscending) {
    // Admissible sets shrink as the level grows, so the next level's smallest
    // unused q is always past the previous one and one forward scan suffices.
    std::int64_t q = 1;
    for (std::int64_t level = 1; level <= depth; ++level) {
      const double bound = level_threshold(level, m);
      while (q <= q_cap && !(max_distance(targets, q) < bound)) ++q;
      if (q > q_cap) throw exhausted(level, q_cap);
      w.q_path[level - 1] = q++;
    }
  } else {
    // Highest level each q can serve, bucketed; then levels depth..1 draw the
    // smallest available q from a min-heap.
    std::vector<std::vector<std::int64_t>> by_level(path.depth() + 1);
    for (std::int64_t q = 1; q <= q_cap; ++q) {
      const double d = max_distance(targets, q);
      std::int64_t level = d == 0.0 ? depth
                                    : static_cast<std::int64_t>(std::min(
                                          static_cast<double>(depth), std::floor(std::pow(d, -m))));
      while (level > 1 && !(d < level_threshold(level, m))) --level;
      while (level < depth && d < level_threshold(level + 1, m)) ++level;
      by_level[static_cast<std::size_t>(std::max<std::int64_t>(level, 1))].push_back(q);
    }
    std::priority_queue<std::int64_t, std::vector<std::int64_t>, std::greater<>> pool;
    for (std::int64_t level = depth; level >= 1; --level) {
      for (const std::int64_t q : by_level[level]) pool.push(q);
      if (pool.empty()) throw exhausted(level, q_cap);
      w.q_path[level - 1] = pool.top();
      pool.pop();
    }
  }

  const std::int64_t widest =
      w.q_path.empty() ? 0 : *std::max_element(w.q_path.begin(), w.q_path.end());
  w.spectrum = Spectrum(widest + std::abs(alpha));
  for (std::size_t level = 1; level <= w.depth; ++level) {
    w.spectrum.set(w.q_path[level - 1] + alpha, coefficient(level, s, m));
  }
  return w;
}

bool witness_invariants_hold(const SharpnessWitness& w) {
  const int m = w.m();
  if (w.q_path.size() != w.depth || w.path.depth() != w.depth) return false;
  const auto targets = rescaled(w.c);
  std::vector<std::int64_t> sorted = w.q_path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t level = 1; level <= w.depth; ++level) {
    const std::int64_t q = w.q_path[level - 1];
    if (q < 1) return false;
    if (!(max_distance(targets, q) < level_threshold(static_cast<std::int64_t>(level), m))) {
      return false;
    }
    if (w.spectrum[q + w.alpha] != Complex{coefficient(level, w.s, m), 0.0}) return false;
  }
  return w.spectrum.coefficients().size() == w.depth;
}

double truncated_criterion(const SharpnessWitness& w, std::int64_t beta,
                           std::size_t depth, bool* infinite) {
  if (depth > w.depth) throw Error(ErrorCode::kInvalidInput, "depth exceeds witness depth");
  Spectrum prefix(w.spectrum.band_limit());
  for (std::size_t level = 1; level <= depth; ++level) {
    const std::int64_t n = w.q_path[level - 1] + w.alpha;
    prefix.set(n, w.spectrum[n]);
  }
  const auto measures = lambda_powers(w.alpha, beta, w.s, w.c);
  const CriterionValue value = ms_criterion(prefix, measures);
  if (infinite != nullptr) *infinite = value.infinite;
  return value.value;
}

DivergenceReport divergence_report(const SharpnessWitness& w, std::int64_t beta) {
  DivergenceReport report;
  report.beta = beta;
  const int m = w.m();
  const double weight_exponent = 2.0 * w.s / m;

  std::vector<std::size_t> checkpoints;
  for (std::size_t decade = 1; decade <= w.depth; decade *= 10) {
    for (const std::size_t mult : {1, 2, 5}) {
      if (decade * mult < w.depth) checkpoints.push_back(decade * mult);
    }
  }
  if (w.depth > 0) checkpoints.push_back(w.depth);

  const auto measures = lambda_powers(w.alpha, beta, w.s, w.c);
  DivergenceRow running;
  double criterion = 0.0;
  bool infinite = false;
  std::size_t next = 0;
  for (std::size_t level = 1; level <= w.depth && next < checkpoints.size(); ++level) {
    const std::int64_t n = w.q_path[level - 1] + w.alpha;
    const double amp2 = std::norm(w.spectrum[n]);
    const double l = static_cast<double>(level);
    running.weighted_sum += std::pow(l, weight_exponent) * amp2;
    running.harmonic_number += 1.0 / l;
    running.norm_squared += amp2;
    running.zeta_partial += std::pow(l, -(1.0 + weight_exponent));

    // Same per-frequency term as ms_criterion, accumulated level by level.
    Spectrum single(w.spectrum.band_limit());
    single.set(n, w.spectrum[n]);
    const CriterionValue term = ms_criterion(single, measures);
    if (term.infinite) {
      infinite = true;
    } else {
      criterion += term.value;
    }

    if (level == checkpoints[next]) {
      running.depth = level;
      running.criterion = infinite ? std::numeric_limits<double>::infinity() : criterion;
      running.criterion_infinite = infinite;
      report.rows.push_back(running);
      ++next;
    }
  }
  if (!report.rows.empty()) {
    const auto& last = report.rows.back();
    report.criterion_to_harmonic = last.criterion / last.harmonic_number;
  }
  return report;
}

}  // namespace gendiff
