#include "gendiff/integrals.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>

#include "gendiff/error.h"
#include "gendiff/parallel.h"
#include "gendiff/random.h"

namespace gendiff {
namespace {

constexpr double kPi = std::numbers::pi;

// Generating vector of an embedded (extensible in base 2) rank-1 lattice from
// F. Y. Kuo's published tables; the leading m components are used for
// dimension m. Valid for every power-of-two point count up to 2^20.
constexpr std::array<std::uint64_t, kMaxLatticeDimension> kLatticeGenerator = {
    1, 182667, 469891, 498753, 110745, 446247, 250185, 118627, 245333};

double int_pow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

struct Box {
  std::vector<double> lo;
  std::vector<double> width;

  double volume() const {
    double v = 1.0;
    for (const double w : width) v *= w;
    return v;
  }
};

Box cube(int m, double lo, double hi) {
  return {std::vector<double>(m, lo), std::vector<double>(m, hi - lo)};
}

// Integrates 1 / (denominator(x) + eps) over the box. denominator must be
// non-negative.
template <class Denominator>
IntegralEstimate integrate(const Box& box, const Denominator& denominator,
                           const McConfig& cfg) {
  const std::size_t m = box.lo.size();
  if (cfg.points < 1) throw Error(ErrorCode::kInvalidInput, "points must be >= 1");
  if (!(cfg.epsilon >= 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "epsilon must be non-negative");
  }
  Engine engine(cfg.seed);
  std::vector<double> x(m);
  bool hit_zero = false;
  const auto sample = [&](std::vector<double>& point) {
    const double d = denominator(point) + cfg.epsilon;
    if (d <= 0.0) {
      hit_zero = true;
      return 0.0;
    }
    return 1.0 / d;
  };

  IntegralEstimate out;
  const double volume = box.volume();
  if (cfg.scheme == Scheme::kPlainMonteCarlo) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < cfg.points; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        x[k] = box.lo[k] + box.width[k] * uniform01(engine);
      }
      const double v = sample(x);
      sum += v;
      sum_sq += v * v;
    }
    const double count = static_cast<double>(cfg.points);
    const double mean = sum / count;
    const double var = cfg.points > 1
                           ? std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0))
                           : 0.0;
    out.value = volume * mean;
    out.std_error = volume * std::sqrt(var / count);
    out.points_used = cfg.points;
  } else {
    if (m > static_cast<std::size_t>(kMaxLatticeDimension)) {
      throw Error(ErrorCode::kInvalidInput,
                  "lattice scheme supports at most " +
                      std::to_string(kMaxLatticeDimension) + " dimensions");
    }
    const std::uint64_t per_shift =
        std::max<std::uint64_t>(1, cfg.points / kLatticeShifts);
    std::array<double, kLatticeShifts> means{};
    std::vector<double> shift(m);
    for (int r = 0; r < kLatticeShifts; ++r) {
      for (auto& d : shift) d = uniform01(engine);
      double sum = 0.0;
      for (std::uint64_t i = 0; i < per_shift; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
          const std::uint64_t step = (i * (kLatticeGenerator[k] % per_shift)) % per_shift;
          double u = static_cast<double>(step) / static_cast<double>(per_shift) + shift[k];
          if (u >= 1.0) u -= 1.0;
          x[k] = box.lo[k] + box.width[k] * u;
        }
        sum += sample(x);
      }
      means[r] = sum / static_cast<double>(per_shift);
    }
    double mean = 0.0;
    for (const double v : means) mean += v;
    mean /= kLatticeShifts;
    double var = 0.0;
    for (const double v : means) var += (v - mean) * (v - mean);
    var /= kLatticeShifts - 1;
    out.value = volume * mean;
    out.std_error = volume * std::sqrt(var / kLatticeShifts);
    out.points_used = per_shift * kLatticeShifts;
  }
  if (hit_zero) {
    out.infinite_trend = true;
    out.value = std::numeric_limits<double>::infinity();
    out.std_error = std::numeric_limits<double>::infinity();
  }
  return out;
}

void check_orders(int s, int m) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "s must be >= 1");
  if (m < 1) throw Error(ErrorCode::kInvalidInput, "m must be >= 1");
}

bool divergence_risk(std::int64_t n, std::int64_t alpha, std::int64_t beta,
                     int s, int m, double epsilon) {
  return epsilon == 0.0 && (m <= 4 * s || n == alpha || n == beta);
}

// Per-axis denominator terms.
struct CosineTerm {
  double k0;  // (alpha - beta)/2
  double k1;  // n - (alpha + beta)/2
  int s;
  double operator()(double x) const {
    const double d = std::cos(k0 * x) - std::cos(k1 * x);
    return int_pow(d * d, s);
  }
};

struct SineTerm {
  double ka;  // n - alpha
  double kb;  // n - beta
  int s;
  double operator()(double x) const {
    const double p = std::sin(ka * x) * std::sin(kb * x);
    return int_pow(p * p, s);
  }
};

CosineTerm cosine_term(std::int64_t n, std::int64_t alpha, std::int64_t beta, int s) {
  return {static_cast<double>(alpha - beta) / 2.0,
          static_cast<double>(n) - static_cast<double>(alpha + beta) / 2.0, s};
}

SineTerm sine_term(std::int64_t n, std::int64_t alpha, std::int64_t beta, int s) {
  return {static_cast<double>(n - alpha), static_cast<double>(n - beta), s};
}

template <class Term>
auto sum_of_terms(Term term) {
  return [term](const std::vector<double>& x) {
    double sum = 0.0;
    for (const double xi : x) sum += term(xi);
    return sum;
  };
}

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 4> kGaussNodes = {
    0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
    0.9602898564975363};
constexpr std::array<double, 4> kGaussWeights = {
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
    0.1012285362903763};

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Trapezoid rule for periodic integrands on [0, period).
Rule periodic_trapezoid(double period, int points) {
  Rule rule;
  const double h = period / points;
  for (int i = 0; i < points; ++i) {
    rule.nodes.push_back(h * i);
    rule.weights.push_back(h);
  }
  return rule;
}

// Composite Gauss-Legendre with ceil(points/8) panels on [a, b].
Rule composite_gauss(double a, double b, int points) {
  const int panels = std::max(1, (points + 7) / 8);
  const double width = (b - a) / panels;
  Rule rule;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + width * (p + 0.5);
    for (std::size_t q = 0; q < kGaussNodes.size(); ++q) {
      for (const double sign : {-1.0, 1.0}) {
        rule.nodes.push_back(mid + sign * 0.5 * width * kGaussNodes[q]);
        rule.weights.push_back(0.5 * width * kGaussWeights[q]);
      }
    }
  }
  return rule;
}

// Tensor-product quadrature of 1 / (sum_t term(x_t) + eps) for m in {1, 2}.
template <class Term>
double tensor_quadrature(const Rule& rule, const Term& term, int m, double eps) {
  std::vector<double> values;
  values.reserve(rule.nodes.size());
  for (const double x : rule.nodes) values.push_back(term(x));
  double total = 0.0;
  if (m == 1) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      total += rule.weights[i] / (values[i] + eps);
    }
    return total;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      row += rule.weights[j] / (values[i] + values[j] + eps);
    }
    total += rule.weights[i] * row;
  }
  return total;
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  return scheme == Scheme::kPlainMonteCarlo ? "plain_monte_carlo"
                                            : "lattice_shifted";
}

Scheme parse_scheme(std::string_view text) {
  if (text == "plain_monte_carlo" || text == "plain") return Scheme::kPlainMonteCarlo;
  if (text == "lattice_shifted" || text == "lattice") return Scheme::kLatticeShifted;
  throw Error(ErrorCode::kInvalidInput, "unknown scheme '" + std::string(text) + "'");
}

IntegralEstimate estimate_lhs(std::int64_t n, std::int64_t alpha,
                              std::int64_t beta, int s, int m,
                              const McConfig& cfg) {
  check_orders(s, m);
  auto out = integrate(cube(m, 0.0, 2.0 * kPi),
                       sum_of_terms(cosine_term(n, alpha, beta, s)), cfg);
  out.divergence_risk = divergence_risk(n, alpha, beta, s, m, cfg.epsilon);
  return out;
}

IntegralEstimate estimate_rhs(std::int64_t n, std::int64_t alpha,
                              std::int64_t beta, int s, int m,
                              const McConfig& cfg) {
  check_orders(s, m);
  auto out = integrate(cube(m, 0.0, kPi / 2.0),
                       sum_of_terms(sine_term(n, alpha, beta, s)), cfg);
  out.divergence_risk = divergence_risk(n, alpha, beta, s, m, cfg.epsilon);
  return out;
}

double folding_identity_check(std::int64_t n, std::int64_t alpha,
                              std::int64_t beta, int s, int m, double epsilon,
                              int quad_points) {
  check_orders(s, m);
  if (m > 2) {
    throw Error(ErrorCode::kInvalidInput,
                "deterministic tensor quadrature supports m in {1, 2}");
  }
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kInvalidInput, "epsilon must be > 0");
  if (quad_points < 8) throw Error(ErrorCode::kInvalidInput, "quad_points must be >= 8");

  const double lhs = tensor_quadrature(periodic_trapezoid(2.0 * kPi, quad_points),
                                       cosine_term(n, alpha, beta, s), m, epsilon);
  const double rescaled_eps = epsilon / std::ldexp(1.0, 2 * s);
  const double rhs = tensor_quadrature(composite_gauss(0.0, kPi / 2.0, quad_points),
                                       sine_term(n, alpha, beta, s), m, rescaled_eps);
  const double factor = std::ldexp(1.0, 2 * m - 2 * s);
  return std::abs(lhs - factor * rhs) / lhs;
}

std::vector<BoundScanRow> uniform_bound_scan(std::int64_t alpha,
                                             std::int64_t beta, int s,
                                             std::int64_t n_min,
                                             std::int64_t n_max,
                                             const McConfig& cfg) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "s must be >= 1");
  if (n_max < n_min) throw Error(ErrorCode::kInvalidInput, "empty n range");
  const int m = 4 * s + 1;
  std::vector<BoundScanRow> rows(static_cast<std::size_t>(n_max - n_min + 1));
  parallel_for(rows.size(), [&](std::size_t i) {
    BoundScanRow& row = rows[i];
    row.n = n_min + static_cast<std::int64_t>(i);
    row.seed = derive_seed(cfg.seed, row.n);
    if (row.n == alpha || row.n == beta) {
      row.skipped = true;
      return;
    }
    McConfig local = cfg;
    local.seed = row.seed;
    row.estimate = estimate_lhs(row.n, alpha, beta, s, m, local);
  });
  return rows;
}

double gamma_half_integer(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidInput, "Gamma(m/2) needs m >= 1");
  // Gamma(x + 1) = x Gamma(x), starting at Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
  double value = m % 2 == 1 ? std::sqrt(kPi) : 1.0;
  for (int twice_x = (m % 2 == 1 ? 1 : 2); twice_x < m; twice_x += 2) {
    value *= twice_x / 2.0;
  }
  return value;
}

BoundConstants lemma41_constants(int m, int s) {
  if (s < 1) throw Error(ErrorCode::kInvalidInput, "s must be >= 1");
  if (m < 4 * s + 1) {
    throw Error(ErrorCode::kInvalidInput,
                "m = " + std::to_string(m) + " must be at least 4s+1 = " +
                    std::to_string(4 * s + 1));
  }
  BoundConstants out{};
  out.m = m;
  out.s = s;
  out.c_m = std::pow(static_cast<double>(m), 1 - 2 * s);
  const int excess = m - 4 * s;
  out.m_lemma41 = std::ldexp(1.0, m + 1) * std::pow(kPi, m / 2.0) *
                  std::pow(static_cast<double>(m), excess / 2.0) /
                  (out.c_m * excess * gamma_half_integer(m));
  return out;
}

JCellResult estimate_J_cell(std::int64_t n, std::int64_t alpha,
                            std::int64_t beta, int s,
                            const std::vector<CellSource>& cells,
                            const McConfig& cfg) {
  const int m = static_cast<int>(cells.size());
  const BoundConstants constants = lemma41_constants(m, s);
  const RefinedPartition refined = refine_for(n, alpha, beta);
  const auto zeros_a = sine_zeros(n, alpha);
  const auto zeros_b = sine_zeros(n, beta);

  Box box;
  std::vector<double> a(m), b(m), a_snapped(m), b_snapped(m);
  for (int t = 0; t < m; ++t) {
    const auto it = std::find(refined.provenance.begin(), refined.provenance.end(),
                              cells[t]);
    if (it == refined.provenance.end()) {
      throw Error(ErrorCode::kStructuralViolation,
                  "(" + std::to_string(cells[t].j) + ", " +
                      std::to_string(cells[t].k) +
                      ") is not a cell of the refinement for n = " +
                      std::to_string(n))
          .with_frequency(n);
    }
    const Interval cell =
        refined.base.cell(static_cast<std::size_t>(it - refined.provenance.begin()));
    box.lo.push_back(cell.lo);
    box.width.push_back(cell.length());
    a[t] = zeros_a[cells[t].j];
    b[t] = zeros_b[cells[t].k];
    std::tie(a_snapped[t], b_snapped[t]) = snap_zero_pair(cell, a[t], b[t]);
  }

  const auto denominator = [s](const std::vector<double>& za,
                               const std::vector<double>& zb) {
    return [s, &za, &zb](const std::vector<double>& x) {
      double sum = 0.0;
      for (std::size_t t = 0; t < x.size(); ++t) {
        const double p = (x[t] - za[t]) * (x[t] - zb[t]);
        sum += int_pow(p * p, s);
      }
      return sum;
    };
  };

  JCellResult out;
  out.estimate = integrate(box, denominator(a_snapped, b_snapped), cfg);
  out.raw_estimate = integrate(box, denominator(a, b), cfg);
  const int excess = m - 4 * s;
  const double widest = static_cast<double>(std::max(std::abs(n - alpha), std::abs(n - beta)));
  out.bound = std::pow(kPi, excess) * constants.m_lemma41 / std::pow(widest, excess);
  const double relative_error =
      out.estimate.value > 0.0 ? out.estimate.std_error / out.estimate.value : 0.0;
  out.within = out.estimate.value <= out.bound * (1.0 + 3.0 * relative_error);
  return out;
}

}  // namespace gendiff
