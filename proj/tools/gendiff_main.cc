// gendiff: command-line front end for the generalized-difference toolkit.
//
// Exit codes: 0 on success, 2 when the library rejects the request (the error
// is printed to stderr as a one-line JSON object), 1 for I/O, JSON schema and
// flag parsing problems.
//
// The primary artifact goes to --out when given, otherwise to stdout. The
// effective configuration and a short summary are printed as "# " lines: to
// stdout when --out is set, to stderr otherwise.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gendiff/decompose.h"
#include "gendiff/error.h"
#include "gendiff/integrals.h"
#include "gendiff/json_io.h"
#include "gendiff/measures.h"
#include "gendiff/operators.h"
#include "gendiff/partitions.h"
#include "gendiff/random.h"
#include "gendiff/sharpness.h"
#include "gendiff/spectrum.h"

namespace {

using nlohmann::json;
using namespace gendiff;

// Failures of the command line itself (bad flag combinations, unreadable
// files); mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

struct Options {
  std::int64_t alpha = 1;
  std::int64_t beta = -1;
  int s = 1;
  int m = 5;
  std::int64_t n = 9;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;

  // decompose / criterion
  int retries = 0;
  std::vector<double> shifts;
  std::string measures_file;

  // solve / apply
  double tol = kDefaultRangeTolerance;
  std::string op = "quadratic";

  // scans and integrals
  std::int64_t n_min = 2;
  std::int64_t n_max = 100;
  std::uint64_t points = 1 << 14;
  std::string scheme = "lattice_shifted";
  double epsilon = 0.0;
  int quad_points = 4096;
  std::vector<std::string> cells;
  int random_cells = 0;

  // sharpness
  std::vector<double> c;
  std::size_t depth = 10000;
  std::int64_t q_cap = 1000000;
  std::uint64_t phi_seed = 0;
  std::string policy = "constrained-first";
  std::string csv;
};

class Run {
 public:
  Run(std::string command, const Options& opt) : command_(std::move(command)), opt_(opt) {}

  void config(const std::string& key, const std::string& value) {
    config_.emplace_back(key, value);
  }
  void summary(const std::string& key, const std::string& value) {
    summary_.emplace_back(key, value);
  }

  // Writes the artifact and the diagnostic lines.
  void finish(const std::string& artifact) {
    std::ostream& diag = opt_.out.empty() ? std::cerr : std::cout;
    diag << "# gendiff " << command_ << '\n';
    for (const auto& [k, v] : config_) diag << "# " << k << " = " << v << '\n';
    if (opt_.out.empty()) {
      std::cout << artifact;
    } else {
      write_text_file(opt_.out, artifact);
      diag << "# wrote " << opt_.out << '\n';
    }
    for (const auto& [k, v] : summary_) diag << "# " << k << ": " << v << '\n';
  }

 private:
  std::string command_;
  const Options& opt_;
  std::vector<std::pair<std::string, std::string>> config_;
  std::vector<std::pair<std::string, std::string>> summary_;
};

Spectrum read_spectrum(const Options& opt) {
  if (opt.in.empty()) throw UsageError("--in is required");
  return spectrum_from_json(read_json_file(opt.in));
}

McConfig mc_config(const Options& opt) {
  McConfig cfg;
  if (opt.points == 0) throw UsageError("--points must be positive");
  if (!(opt.epsilon >= 0.0)) throw UsageError("--epsilon must be non-negative");
  cfg.points = opt.points;
  cfg.seed = opt.seed;
  cfg.epsilon = opt.epsilon;
  try {
    cfg.scheme = parse_scheme(opt.scheme);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

void add_mc_config(Run& run, const McConfig& cfg) {
  run.config("points", std::to_string(cfg.points));
  run.config("seed", std::to_string(cfg.seed));
  run.config("scheme", std::string(scheme_name(cfg.scheme)));
  run.config("epsilon", num(cfg.epsilon));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Shifts from --shifts if given, otherwise random_shifts(s, seed).
std::vector<double> shifts_for(const Options& opt, std::uint64_t seed) {
  if (!opt.shifts.empty()) return opt.shifts;
  return random_shifts(opt.s, seed);
}

void cmd_decompose(const Options& opt) {
  Run run("decompose", opt);
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("s", std::to_string(opt.s));
  run.config("seed", std::to_string(opt.seed));
  run.config("retries", std::to_string(opt.retries));
  run.config("in", opt.in);
  const Spectrum f = read_spectrum(opt);

  // Attempt k > 0 draws shifts from derive_seed(seed, k).
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t seed = attempt == 0 ? opt.seed : derive_seed(opt.seed, attempt);
    try {
      const DecompositionCertificate cert =
          decompose_gd(f, opt.alpha, opt.beta, opt.s, shifts_for(opt, seed));
      run.summary("attempts", std::to_string(attempt + 1));
      run.summary("shift_seed", std::to_string(seed));
      run.summary("residual", num(cert.residual));
      run.summary("criterion", cert.criterion.infinite ? "inf" : num(cert.criterion.value));
      run.finish(dump(certificate_to_json(cert)));
      return;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBadShiftSet || attempt >= opt.retries || !opt.shifts.empty()) {
        throw;
      }
    }
  }
}

void cmd_criterion(const Options& opt) {
  Run run("criterion", opt);
  run.config("in", opt.in);
  std::vector<DiscreteMeasure> measures;
  if (!opt.measures_file.empty()) {
    run.config("measures", opt.measures_file);
    measures = measures_from_json(read_json_file(opt.measures_file));
  } else {
    const auto shifts = shifts_for(opt, opt.seed);
    run.config("alpha", std::to_string(opt.alpha));
    run.config("beta", std::to_string(opt.beta));
    run.config("s", std::to_string(opt.s));
    if (opt.shifts.empty()) run.config("seed", std::to_string(opt.seed));
    measures = lambda_powers(opt.alpha, opt.beta, opt.s, shifts);
  }
  const Spectrum f = read_spectrum(opt);
  const CriterionValue v = ms_criterion(f, measures);
  json out = {{"criterion", criterion_to_json(v)}, {"measures", measures.size()}};
  if (v.offending_frequency) out["offending_frequency"] = *v.offending_frequency;
  run.summary("criterion", v.infinite ? "inf" : num(v.value));
  run.finish(dump(out));
}

void cmd_solve(const Options& opt) {
  Run run("solve", opt);
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("s", std::to_string(opt.s));
  run.config("tol", num(opt.tol));
  run.config("in", opt.in);
  const Spectrum f = read_spectrum(opt);
  const QuadraticSymbol sym{opt.alpha, opt.beta, opt.s};
  const Spectrum g = solve_quadratic(sym, f, opt.tol);
  Spectrum back = apply_quadratic(sym, g);
  Spectrum target = f;
  target.erase(opt.alpha);
  target.erase(opt.beta);
  const double denom = l2_norm(target);
  const double err = l2_norm(back - target);
  run.summary("roundtrip_relative_error", num(denom > 0 ? err / denom : err));
  run.finish(dump(spectrum_to_json(g)));
}

void cmd_apply(const Options& opt) {
  Run run("apply", opt);
  run.config("op", opt.op);
  run.config("s", std::to_string(opt.s));
  run.config("in", opt.in);
  const Spectrum g = read_spectrum(opt);
  Spectrum f;
  if (opt.op == "quadratic") {
    run.config("alpha", std::to_string(opt.alpha));
    run.config("beta", std::to_string(opt.beta));
    f = apply_quadratic({opt.alpha, opt.beta, opt.s}, g);
  } else if (opt.op == "derivative") {
    f = apply_derivative(g, opt.s);
  } else {
    throw UsageError("--op must be quadratic or derivative");
  }
  run.summary("l2_norm", num(l2_norm(f)));
  run.finish(dump(spectrum_to_json(f)));
}

void cmd_partition_scan(const Options& opt) {
  Run run("partition-scan", opt);
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("n_min", std::to_string(opt.n_min));
  run.config("n_max", std::to_string(opt.n_max));
  if (opt.n_min > opt.n_max) throw UsageError("--n-min exceeds --n-max");
  std::ostringstream csv;
  csv << "n,alpha,beta,cell_count,bound,max_len,len_bound,ok\n";
  std::size_t rows = 0, violations = 0, skipped = 0;
  for (std::int64_t n = opt.n_min; n <= opt.n_max; ++n) {
    if (n == opt.alpha || n == opt.beta) {
      ++skipped;
      continue;
    }
    const RefinementStats st = refinement_stats(n, opt.alpha, opt.beta);
    const bool ok = st.count_ok && st.length_ok;
    csv << n << ',' << opt.alpha << ',' << opt.beta << ',' << st.count << ','
        << st.count_bound << ',' << num(st.max_length) << ',' << num(st.length_bound) << ','
        << (ok ? 1 : 0) << '\n';
    ++rows;
    if (!ok) ++violations;
  }
  run.summary("rows", std::to_string(rows));
  run.summary("skipped", std::to_string(skipped));
  run.summary("violations", std::to_string(violations));
  run.finish(csv.str());
}

void cmd_bound_scan(const Options& opt) {
  Run run("bound-scan", opt);
  const McConfig cfg = mc_config(opt);
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("s", std::to_string(opt.s));
  run.config("m", std::to_string(4 * opt.s + 1));
  run.config("n_min", std::to_string(opt.n_min));
  run.config("n_max", std::to_string(opt.n_max));
  add_mc_config(run, cfg);
  if (opt.n_min > opt.n_max) throw UsageError("--n-min exceeds --n-max");
  const auto rows = uniform_bound_scan(opt.alpha, opt.beta, opt.s, opt.n_min, opt.n_max, cfg);
  std::ostringstream csv;
  csv << "n,estimate,std_error,points,epsilon,scheme,seed\n";
  double max_value = 0.0;
  for (const auto& r : rows) {
    csv << r.n << ',';
    if (r.skipped) {
      csv << "skipped,,";
    } else {
      csv << num(r.estimate.value) << ',' << num(r.estimate.std_error) << ',';
      max_value = std::max(max_value, r.estimate.value);
    }
    csv << r.estimate.points_used << ',' << num(cfg.epsilon) << ','
        << scheme_name(cfg.scheme) << ',' << r.seed << '\n';
  }
  run.summary("rows", std::to_string(rows.size()));
  run.summary("max_estimate", num(max_value));
  run.finish(csv.str());
}

void cmd_identity_check(const Options& opt) {
  Run run("identity-check", opt);
  run.config("n", std::to_string(opt.n));
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("s", std::to_string(opt.s));
  run.config("m", std::to_string(opt.m));
  run.config("epsilon", num(opt.epsilon));
  run.config("quad_points", std::to_string(opt.quad_points));
  const double rel = folding_identity_check(opt.n, opt.alpha, opt.beta, opt.s, opt.m,
                                            opt.epsilon, opt.quad_points);
  run.summary("relative_difference", num(rel));
  run.finish(dump({{"relative_difference", rel}}));
}

std::vector<CellSource> parse_cells(const std::vector<std::string>& text) {
  std::vector<CellSource> cells;
  for (const auto& item : text) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("cell '" + item + "' is not j:k");
    try {
      cells.push_back({static_cast<std::size_t>(std::stoull(item.substr(0, colon))),
                       static_cast<std::size_t>(std::stoull(item.substr(colon + 1)))});
    } catch (const std::logic_error&) {
      throw UsageError("cell '" + item + "' is not j:k");
    }
  }
  return cells;
}

void cmd_j_cell(const Options& opt) {
  Run run("j-cell", opt);
  McConfig cfg = mc_config(opt);
  run.config("n", std::to_string(opt.n));
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("s", std::to_string(opt.s));
  add_mc_config(run, cfg);

  std::vector<std::vector<CellSource>> tuples;
  if (!opt.cells.empty()) {
    tuples.push_back(parse_cells(opt.cells));
  } else {
    if (opt.random_cells <= 0) throw UsageError("give --cells or --random-cells");
    run.config("m", std::to_string(opt.m));
    run.config("random_cells", std::to_string(opt.random_cells));
    const RefinedPartition rp = refine_for(opt.n, opt.alpha, opt.beta);
    Engine engine(opt.seed);
    for (int t = 0; t < opt.random_cells; ++t) {
      std::vector<CellSource> tuple;
      for (int i = 0; i < opt.m; ++i) {
        tuple.push_back(rp.provenance[engine() % rp.provenance.size()]);
      }
      tuples.push_back(std::move(tuple));
    }
  }

  json rows = json::array();
  std::size_t within = 0;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    McConfig row_cfg = cfg;
    row_cfg.seed = derive_seed(cfg.seed, static_cast<std::int64_t>(t));
    const JCellResult r = estimate_J_cell(opt.n, opt.alpha, opt.beta, opt.s, tuples[t], row_cfg);
    json cells = json::array();
    for (const auto& c : tuples[t]) cells.push_back({c.j, c.k});
    rows.push_back({{"cells", std::move(cells)},
                    {"seed", row_cfg.seed},
                    {"estimate", estimate_to_json(r.estimate)},
                    {"raw_estimate", estimate_to_json(r.raw_estimate)},
                    {"bound", r.bound},
                    {"within", r.within}});
    if (r.within) ++within;
  }
  run.summary("within", std::to_string(within) + "/" + std::to_string(tuples.size()));
  run.finish(dump({{"results", std::move(rows)}}));
}

// 2pi * frac(sqrt(p)) for the first m primes.
std::vector<double> default_shift_points(int m) {
  std::vector<double> c;
  for (std::int64_t p = 2; static_cast<int>(c.size()) < m; ++p) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) prime = false;
    }
    if (!prime) continue;
    const double r = std::sqrt(static_cast<double>(p));
    c.push_back(2.0 * std::numbers::pi * (r - std::floor(r)));
  }
  return c;
}

void cmd_sharpness(const Options& opt) {
  Run run("sharpness", opt);
  const std::vector<double> c = opt.c.empty() ? default_shift_points(opt.m) : opt.c;
  QAssignment policy;
  if (opt.policy == "constrained-first") {
    policy = QAssignment::kConstrainedFirst;
  } else if (opt.policy == "ascending") {
    policy = QAssignment::kAscending;
  } else {
    throw UsageError("--policy must be ascending or constrained-first");
  }
  std::string cs;
  for (double x : c) cs += (cs.empty() ? "" : ",") + num(x);
  run.config("c", cs);
  run.config("m", std::to_string(c.size()));
  run.config("alpha", std::to_string(opt.alpha));
  run.config("beta", std::to_string(opt.beta));
  run.config("s", std::to_string(opt.s));
  run.config("depth", std::to_string(opt.depth));
  run.config("q_cap", std::to_string(opt.q_cap));
  run.config("phi_seed", std::to_string(opt.phi_seed));
  run.config("policy", opt.policy);

  const PhiPath path = PhiPath::from_seed(opt.depth, opt.phi_seed);
  const SharpnessWitness w = build_witness(c, opt.alpha, opt.s, path, opt.q_cap, policy);
  const DivergenceReport report = divergence_report(w, opt.beta);

  if (!opt.csv.empty()) {
    std::ostringstream csv;
    csv << "L,S_L,norm2,criterion\n";
    for (const auto& r : report.rows) {
      csv << r.depth << ',' << num(r.weighted_sum) << ',' << num(r.norm_squared) << ','
          << (r.criterion_infinite ? "inf" : num(r.criterion)) << '\n';
    }
    write_text_file(opt.csv, csv.str());
    run.config("csv", opt.csv);
  }
  const auto& last = report.rows.back();
  run.summary("invariants", witness_invariants_hold(w) ? "hold" : "VIOLATED");
  run.summary("S_L", num(last.weighted_sum));
  run.summary("H_L", num(last.harmonic_number));
  run.summary("norm_squared", num(last.norm_squared));
  run.summary("criterion", last.criterion_infinite ? "inf" : num(last.criterion));
  run.finish(dump(witness_to_json(w, &report)));
}

void cmd_constants(const Options& opt) {
  Run run("constants", opt);
  run.config("m", std::to_string(opt.m));
  run.config("s", std::to_string(opt.s));
  const BoundConstants k = lemma41_constants(opt.m, opt.s);
  run.summary("M", num(k.m_lemma41));
  run.finish(dump(constants_to_json(k)));
}

void print_error(const std::string& name, const std::string& message,
                 const std::optional<std::int64_t>& frequency = std::nullopt,
                 const std::optional<std::int64_t>& level = std::nullopt) {
  json err = {{"error", name}, {"message", message}};
  if (frequency) err["frequency"] = *frequency;
  if (level) err["level"] = *level;
  std::cerr << err.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Generalized differences on the circle: decompositions, operator equations, "
               "partition and integral bounds, Diophantine sharpness witnesses."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto alpha_beta_s = [&](CLI::App* sub) {
    sub->add_option("--alpha", opt.alpha, "First zero of the multiplier")->capture_default_str();
    sub->add_option("--beta", opt.beta, "Second zero of the multiplier")->capture_default_str();
    sub->add_option("--s", opt.s, "Power s >= 1")->capture_default_str()->check(CLI::PositiveNumber);
  };
  auto io = [&](CLI::App* sub, bool needs_in) {
    if (needs_in) sub->add_option("--in", opt.in, "Input Spectrum JSON")->required();
    sub->add_option("--out", opt.out, "Output file (default stdout)");
  };
  auto mc = [&](CLI::App* sub) {
    sub->add_option("--points", opt.points, "Total sample points")->capture_default_str();
    sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sub->add_option("--scheme", opt.scheme, "plain_monte_carlo or lattice_shifted")
        ->capture_default_str();
    sub->add_option("--epsilon", opt.epsilon, "Regularization added to denominators")
        ->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, std::function<void(const Options&)>>> commands;

  auto* decompose = app.add_subcommand(
      "decompose",
      "Write f as a sum of 4s+1 generalized differences lambda_b^s * f_j at random shifts. "
      "Writes a certificate.");
  alpha_beta_s(decompose);
  io(decompose, true);
  decompose->add_option("--seed", opt.seed, "Seed for the shift draw")->capture_default_str();
  decompose->add_option("--retries", opt.retries, "Redraws allowed on BadShiftSet")
      ->capture_default_str();
  decompose->add_option("--shifts", opt.shifts, "Explicit shifts b_j (comma separated)")
      ->delimiter(',');
  commands.emplace_back(decompose, cmd_decompose);

  auto* criterion = app.add_subcommand(
      "criterion",
      "Evaluate the Meisters-Schmidt series sum |f^(n)|^2 / sum_j |mu_j^(n)|^2 for measures "
      "from --measures or lambda_b^s at --shifts / seeded shifts.");
  alpha_beta_s(criterion);
  io(criterion, true);
  criterion->add_option("--measures", opt.measures_file, "Measures JSON (array of measures)");
  criterion->add_option("--shifts", opt.shifts, "Shifts b_j (comma separated)")->delimiter(',');
  criterion->add_option("--seed", opt.seed, "Seed for random shifts")->capture_default_str();
  commands.emplace_back(criterion, cmd_criterion);

  auto* solve = app.add_subcommand(
      "solve",
      "Solve (D^2 - i(alpha+beta)D - alpha beta I)^s g = f on the range of the quadratic "
      "multiplier operator.");
  alpha_beta_s(solve);
  io(solve, true);
  solve->add_option("--tol", opt.tol, "Relative tolerance for f^(alpha), f^(beta)")
      ->capture_default_str();
  commands.emplace_back(solve, cmd_solve);

  auto* apply = app.add_subcommand(
      "apply",
      "Apply the quadratic multiplier operator (symbol (-1)^s (n-alpha)^s (n-beta)^s) or the "
      "derivative D^s.");
  alpha_beta_s(apply);
  io(apply, true);
  apply->add_option("--op", opt.op, "quadratic or derivative")->capture_default_str();
  commands.emplace_back(apply, cmd_apply);

  auto* partition_scan = app.add_subcommand(
      "partition-scan",
      "Refine the zero-adapted partitions P(alpha), P(beta) of [0, pi/2] for each n and check "
      "the cell count and cell length bounds. Writes CSV.");
  partition_scan->add_option("--alpha", opt.alpha)->capture_default_str();
  partition_scan->add_option("--beta", opt.beta)->capture_default_str();
  partition_scan->add_option("--n-min", opt.n_min)->capture_default_str();
  partition_scan->add_option("--n-max", opt.n_max)->capture_default_str();
  io(partition_scan, false);
  commands.emplace_back(partition_scan, cmd_partition_scan);

  auto* bound_scan = app.add_subcommand(
      "bound-scan",
      "Estimate the [0, 2pi]^m cosine-difference integral with m = 4s+1 for each n. "
      "Writes CSV.");
  alpha_beta_s(bound_scan);
  bound_scan->add_option("--n-min", opt.n_min)->capture_default_str();
  bound_scan->add_option("--n-max", opt.n_max)->capture_default_str();
  mc(bound_scan);
  io(bound_scan, false);
  commands.emplace_back(bound_scan, cmd_bound_scan);

  auto* identity = app.add_subcommand(
      "identity-check",
      "Check the regularized folding identity LHS_eps = 2^{2m-2s} RHS_{eps/2^{2s}} between "
      "the cosine and sine integrals by tensor quadrature.");
  alpha_beta_s(identity);
  identity->add_option("--n", opt.n)->capture_default_str();
  identity->add_option("--m", opt.m, "Dimension, 1 or 2")->capture_default_str();
  identity->add_option("--epsilon", opt.epsilon, "Regularization > 0")->required();
  identity->add_option("--quad-points", opt.quad_points, "Points per axis")->capture_default_str();
  io(identity, false);
  commands.emplace_back(identity, cmd_identity_check);

  auto* j_cell = app.add_subcommand(
      "j-cell",
      "Estimate the J-integral over a product of refinement cells with snapped zeros and "
      "compare it with the closed-form bound pi^{m-4s} M / max|n-gamma|^{m-4s}.");
  alpha_beta_s(j_cell);
  j_cell->add_option("--n", opt.n)->capture_default_str();
  j_cell->add_option("--m", opt.m, "Tuple length for --random-cells")->capture_default_str();
  j_cell->add_option("--cells", opt.cells, "Cells as j:k (comma separated)")->delimiter(',');
  j_cell->add_option("--random-cells", opt.random_cells, "Number of seeded random tuples");
  mc(j_cell);
  io(j_cell, false);
  commands.emplace_back(j_cell, cmd_j_cell);

  auto* sharpness = app.add_subcommand(
      "sharpness",
      "Build the Diophantine counterexample f_phi for fixed shifts c_j and report the "
      "partial sums showing that no decomposition at those shifts exists.");
  sharpness->add_option("--c", opt.c, "Shift points c_j in [0, 2pi] (default 2pi frac(sqrt p))")
      ->delimiter(',');
  sharpness->add_option("--m", opt.m, "Number of default shift points")->capture_default_str();
  sharpness->add_option("--alpha", opt.alpha)->capture_default_str();
  sharpness->add_option("--beta", opt.beta)->capture_default_str();
  sharpness->add_option("--s", opt.s)->capture_default_str()->check(CLI::PositiveNumber);
  sharpness->add_option("--depth", opt.depth, "Depth L")->capture_default_str();
  sharpness->add_option("--q-cap", opt.q_cap, "Largest q searched")->capture_default_str();
  sharpness->add_option("--phi-seed", opt.phi_seed, "Seed of the phi path")->capture_default_str();
  sharpness->add_option("--policy", opt.policy, "ascending or constrained-first")
      ->capture_default_str();
  sharpness->add_option("--csv", opt.csv, "Partial-sum table CSV (L, S_L, norm2, criterion)");
  io(sharpness, false);
  commands.emplace_back(sharpness, cmd_sharpness);

  auto* constants = app.add_subcommand(
      "constants", "Closed-form constants C_m = m^{1-2s} and M of the R^m integral estimate.");
  constants->add_option("--m", opt.m)->capture_default_str();
  constants->add_option("--s", opt.s)->capture_default_str();
  io(constants, false);
  commands.emplace_back(constants, cmd_constants);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) handler(opt);
    }
  } catch (const Error& e) {
    print_error(std::string(e.name()), e.what(), e.frequency(), e.level());
    return 2;
  } catch (const SchemaError& e) {
    print_error("SchemaError", e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    print_error("SchemaError", e.what());
    return 1;
  } catch (const UsageError& e) {
    print_error("UsageError", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("IOError", e.what());
    return 1;
  }
  return 0;
}
