#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rks/bounds.hpp"
#include "rks/csv.hpp"
#include "rks/experiments.hpp"
#include "rks/kernel_space.hpp"
#include "rks/reconstruct.hpp"
#include "rks/sampling.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::uint64_t resolve_seed(std::optional<std::uint64_t> requested) {
  if (requested) return *requested;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void write_table(const rks::CsvTable& table, const std::string& path) {
  if (path.empty() || path == "-") {
    rks::emit_csv(std::cout, table);
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  rks::emit_csv(os, table);
  if (!os.good()) throw std::runtime_error("write failed: " + path);
}

rks::CsvTable base_table(std::uint64_t seed, int trials) {
  rks::CsvTable t;
  t.metadata.emplace_back("seed", std::to_string(seed));
  t.metadata.emplace_back("trials", std::to_string(trials));
  t.metadata.emplace_back("version", kVersion);
  t.metadata.emplace_back("timestamp", rks::iso_timestamp());
  return t;
}

std::string fmt(double v) { return rks::format_number(v); }

struct CommonOpts {
  std::string output;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-o,--output", opts.output, "output CSV path ('-' or empty: stdout)");
  cmd->add_option("--seed", opts.seed, "master seed (default: drawn from entropy)");
}

int run_space_info(const std::string& kind_name, int lo, int hi,
                   std::optional<std::uint64_t> jitter_seed, const std::string& output) {
  const rks::GeneratorKind kind =
      kind_name == "hat" ? rks::GeneratorKind::hat : rks::GeneratorKind::gaussian;
  const rks::KernelSpace space = rks::KernelSpace::make(kind, lo, hi, jitter_seed);
  const rks::SchurEstimate& schur = space.schur();

  rks::CsvTable t;
  t.metadata.emplace_back("version", kVersion);
  t.metadata.emplace_back("timestamp", rks::iso_timestamp());
  t.header = {"property", "value"};
  t.rows = {
      {"kind", kind_name},
      {"index_lo", std::to_string(lo)},
      {"index_hi", std::to_string(hi)},
      {"size", std::to_string(space.size())},
      {"gram_diag", fmt(space.gram()(0, 0))},
      {"gram_offdiag", fmt(space.size() > 1 ? space.gram()(0, 1) : 0.0)},
      {"inverse_decay_ratio", fmt(space.inverse_decay_ratio())},
      {"schur_norm", fmt(schur.schur_norm)},
      {"modulus_schur", fmt(schur.modulus_schur)},
      {"schur_combined", fmt(schur.combined)},
  };
  write_table(t, output);
  return 0;
}

int run_table1(std::vector<double> Ls, std::vector<double> alphas, int iters, int trials,
               const CommonOpts& common) {
  const std::uint64_t seed = resolve_seed(common.seed);
  rks::CsvTable t = base_table(seed, trials);
  t.header = {"L", "alpha", "n", "mean_rae", "trials"};
  std::sort(Ls.begin(), Ls.end());
  std::sort(alphas.begin(), alphas.end());
  std::size_t cell = 0;
  for (double L : Ls) {
    rks::ExperimentSpec spec;
    spec.L = L;
    spec.trials = trials;
    spec.n_iters = iters;
    spec.mode = rks::SamplingMode::deterministic;
    for (double alpha : alphas) {
      spec.alpha = alpha;
      spec.master_seed = rks::derive_seed(seed, cell++);
      const auto results = rks::run_campaign(spec);
      for (int n = 0; n <= iters; ++n)
        t.rows.push_back({fmt(L), fmt(alpha), std::to_string(n),
                          fmt(rks::aggregate_mean_rae(results, n)), std::to_string(trials)});
    }
  }
  write_table(t, common.output);
  return 0;
}

int run_table2(std::vector<double> Ls, std::vector<double> alphas,
               const std::vector<int>& N_rules, int iters, int trials, const CommonOpts& common) {
  const std::uint64_t seed = resolve_seed(common.seed);
  rks::CsvTable t = base_table(seed, trials);
  t.header = {"L", "alpha", "N_rule", "success_rate_pct", "trials"};
  std::sort(Ls.begin(), Ls.end());
  std::sort(alphas.begin(), alphas.end());
  std::size_t cell = 0;
  for (double L : Ls) {
    for (double alpha : alphas) {
      for (int rule : N_rules) {
        rks::ExperimentSpec spec;
        spec.L = L;
        spec.alpha = alpha;
        spec.trials = trials;
        spec.n_iters = iters;
        spec.mode = rks::SamplingMode::random;
        spec.N = static_cast<int>(rule * L);
        spec.master_seed = rks::derive_seed(seed, cell++);
        const auto results = rks::run_campaign(spec);
        t.rows.push_back({fmt(L), fmt(alpha), std::to_string(rule) + "L",
                          fmt(rks::aggregate_success_rate_pct(results)), std::to_string(trials)});
      }
    }
  }
  write_table(t, common.output);
  return 0;
}

int run_noise_sweep(double L, double alpha, const std::vector<int>& N_grid, int trials,
                    const CommonOpts& common) {
  const std::uint64_t seed = resolve_seed(common.seed);
  std::vector<int> grid = N_grid;
  std::sort(grid.begin(), grid.end());
  const auto curve = rks::noise_sweep(L, alpha, grid, trials, seed);
  rks::CsvTable t = base_table(seed, trials);
  t.metadata.emplace_back("noise_amp", fmt(rks::default_noise_amp(L, alpha)));
  t.header = {"L", "alpha", "N", "mean_rae", "trials"};
  for (const rks::NoisePoint& p : curve)
    t.rows.push_back({fmt(L), fmt(alpha), std::to_string(p.N), fmt(p.mean_rae),
                      std::to_string(trials)});
  write_table(t, common.output);
  return 0;
}

int run_coverage(double L, const std::vector<int>& Ns, const std::vector<double>& delta1s,
                 int trials, const CommonOpts& common) {
  const std::uint64_t seed = resolve_seed(common.seed);
  rks::CsvTable t = base_table(seed, trials);
  t.header = {"L", "N", "delta1", "empirical", "bound_raw", "bound_clamped"};
  rks::TheoryParams params;
  params.mu_omega = 2.0 * L;
  std::size_t cell = 0;
  for (int N : Ns)
    for (double d1 : delta1s) {
      const rks::CoverageBound bound = rks::coverage_bound(params, d1, N);
      const double freq =
          rks::empirical_coverage(L, N, d1, trials, rks::derive_seed(seed, cell++));
      t.rows.push_back(
          {fmt(L), std::to_string(N), fmt(d1), fmt(freq), fmt(bound.raw), fmt(bound.clamped)});
    }
  write_table(t, common.output);
  return 0;
}

int run_bounds(const rks::TheoryParams& params, double d_h, const std::string& output) {
  rks::CsvTable t;
  t.metadata.emplace_back("version", kVersion);
  t.metadata.emplace_back("timestamp", rks::iso_timestamp());
  t.header = {"quantity", "value"};
  if (d_h > 0.0) {
    try {
      const rks::C0Result c0 = rks::c0_and_error(params, d_h);
      t.rows.push_back({"C0", fmt(c0.c0)});
      t.rows.push_back({"det_error_factor", fmt(c0.det_error_factor)});
      t.rows.push_back({"noisy_noise_factor", fmt(c0.noisy_noise_factor)});
    } catch (const std::domain_error&) {
      t.rows.push_back({"C0", "infeasible"});
    }
    try {
      const int n_general = rks::required_iterations(params.eps, params.k_norm, params.theta, d_h,
                                                     rks::IterationRule::general);
      t.rows.push_back({"required_iterations_general", std::to_string(n_general)});
    } catch (const std::domain_error&) {
      t.rows.push_back({"required_iterations_general", "infeasible"});
    }
    t.rows.push_back({"required_iterations_simplified",
                      std::to_string(rks::required_iterations(params.eps, params.k_norm,
                                                              params.theta, d_h,
                                                              rks::IterationRule::simplified))});
  }
  const rks::RandomThresholds random = rks::random_thresholds(params);
  t.rows.push_back({"tau_of_N_raw", fmt(random.tau_of_N_raw)});
  t.rows.push_back({"tau_of_N", fmt(random.tau_of_N)});
  t.rows.push_back({"N0", fmt(random.N0)});
  t.rows.push_back({"N1", fmt(random.N1)});
  const rks::NoiseThresholds noise = rks::noise_thresholds(params);
  t.rows.push_back({"delta1_tilde", fmt(noise.delta1_tilde)});
  t.rows.push_back({"N_min", fmt(noise.N_min)});
  write_table(t, output);
  return 0;
}

int run_remark34(int R, const std::vector<double>& deltas, double grid_gap, int iters,
                 const std::string& output) {
  const rks::KernelSpace space = rks::KernelSpace::make(rks::GeneratorKind::hat, -R - 5, R + 5);
  std::vector<double> positions;
  for (double x = -R; x <= R + 1e-12; x += grid_gap) positions.push_back(x);
  rks::SamplingSet sampling = rks::interior_from_positions(positions, static_cast<double>(R));
  rks::CsvTable t;
  t.metadata.emplace_back("version", kVersion);
  t.metadata.emplace_back("timestamp", rks::iso_timestamp());
  t.header = {"R", "delta", "max_pair_error", "eps_measured", "identical"};
  for (double delta : deltas) {
    const rks::Remark34Result r = rks::remark34_demo(space, R, delta, sampling, iters);
    t.rows.push_back({std::to_string(R), fmt(delta), fmt(r.max_pair_error), fmt(r.eps_measured),
                      r.reconstructions_identical ? "1" : "0"});
  }
  write_table(t, output);
  return 0;
}

int run_reconstruct_one(double L, double alpha, const std::string& mode_name, int N,
                        double noise_amp, int iters, const CommonOpts& common) {
  const std::uint64_t seed = resolve_seed(common.seed);
  rks::ExperimentSpec spec;
  spec.L = L;
  spec.alpha = alpha;
  spec.n_iters = iters;
  spec.trials = 1;
  spec.master_seed = seed;
  if (mode_name == "deterministic") {
    spec.mode = rks::SamplingMode::deterministic;
  } else if (mode_name == "random") {
    spec.mode = rks::SamplingMode::random;
    spec.N = N;
  } else {
    spec.mode = rks::SamplingMode::random_noisy;
    spec.N = N;
    spec.noise_amp = noise_amp >= 0.0 ? noise_amp : rks::default_noise_amp(L, alpha);
  }
  const auto results = rks::run_campaign(spec);
  rks::CsvTable t = base_table(seed, 1);
  t.metadata.emplace_back("eps_target", fmt(results[0].eps_target));
  t.metadata.emplace_back("concentration_measured", fmt(results[0].concentration_measured));
  t.metadata.emplace_back("hausdorff", fmt(results[0].hausdorff));
  t.header = {"iter", "rae"};
  for (std::size_t n = 0; n < results[0].rae_by_iter.size(); ++n)
    t.rows.push_back({std::to_string(n), fmt(results[0].rae_by_iter[n])});
  write_table(t, common.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling and iterative reconstruction of concentrated signals in "
               "shift-invariant reproducing kernel spaces"};
  app.require_subcommand(1);

  // space-info
  auto* sc_space = app.add_subcommand("space-info", "kernel-space diagnostics");
  std::string si_kind = "gaussian";
  int si_lo = -20, si_hi = 20;
  std::optional<std::uint64_t> si_jitter;
  std::string si_output;
  sc_space->add_option("--kind", si_kind, "generator kind")
      ->check(CLI::IsMember({"gaussian", "hat"}));
  sc_space->add_option("--lo", si_lo, "lowest basis index");
  sc_space->add_option("--hi", si_hi, "highest basis index");
  sc_space->add_option("--jitter-seed", si_jitter, "gaussian center jitter seed");
  sc_space->add_option("-o,--output", si_output, "output CSV path");

  // table1
  auto* sc_t1 = app.add_subcommand("table1", "deterministic campaign mean RAE table");
  std::vector<double> t1_L = {50.0, 110.0};
  std::vector<double> t1_alpha = {0.0, 0.2, 0.4, 0.6, 0.8};
  int t1_iters = 3, t1_trials = 50;
  CommonOpts t1_common;
  sc_t1->add_option("--L", t1_L, "domain half-widths")->delimiter(',');
  sc_t1->add_option("--alpha", t1_alpha, "decay exponents")->delimiter(',');
  sc_t1->add_option("--iters", t1_iters, "iteration count")->check(CLI::NonNegativeNumber);
  sc_t1->add_option("--trials", t1_trials, "trials per cell")->check(CLI::PositiveNumber);
  add_common(sc_t1, t1_common);

  // table2
  auto* sc_t2 = app.add_subcommand("table2", "random campaign success-rate table");
  std::vector<double> t2_L = {50.0};
  std::vector<double> t2_alpha = {0.0, 0.2, 0.4, 0.6, 0.8};
  std::vector<int> t2_rules = {8, 12};
  int t2_iters = 6, t2_trials = 100;
  CommonOpts t2_common;
  sc_t2->add_option("--L", t2_L, "domain half-widths")->delimiter(',');
  sc_t2->add_option("--alpha", t2_alpha, "decay exponents")->delimiter(',');
  sc_t2->add_option("--N-rule", t2_rules, "sample counts as multiples of L")->delimiter(',');
  sc_t2->add_option("--iters", t2_iters, "iteration count")->check(CLI::NonNegativeNumber);
  sc_t2->add_option("--trials", t2_trials, "trials per cell")->check(CLI::PositiveNumber);
  add_common(sc_t2, t2_common);

  // noise-sweep
  auto* sc_ns = app.add_subcommand("noise-sweep", "mean RAE versus sample count under noise");
  double ns_L = 50.0, ns_alpha = 0.0;
  std::vector<int> ns_grid = {1000, 2000, 5000};
  int ns_trials = 50;
  CommonOpts ns_common;
  sc_ns->add_option("--L", ns_L, "domain half-width");
  sc_ns->add_option("--alpha", ns_alpha, "decay exponent");
  sc_ns->add_option("--N-grid", ns_grid, "sample counts")->delimiter(',');
  sc_ns->add_option("--trials", ns_trials, "trials per point")->check(CLI::PositiveNumber);
  add_common(sc_ns, ns_common);

  // coverage
  auto* sc_cov = app.add_subcommand("coverage", "gap-probability bound versus Monte Carlo");
  double cov_L = 50.0;
  std::vector<int> cov_N = {500, 1000};
  std::vector<double> cov_d1 = {0.5, 1.0};
  int cov_trials = 500;
  CommonOpts cov_common;
  sc_cov->add_option("--L", cov_L, "domain half-width");
  sc_cov->add_option("--N", cov_N, "sample counts")->delimiter(',');
  sc_cov->add_option("--delta1", cov_d1, "gap thresholds")->delimiter(',');
  sc_cov->add_option("--trials", cov_trials, "trials per cell")->check(CLI::PositiveNumber);
  add_common(sc_cov, cov_common);

  // bounds
  auto* sc_b = app.add_subcommand("bounds", "closed-form bound evaluators");
  rks::TheoryParams b_params;
  b_params.k_norm = 1.0;
  b_params.eps = 0.1;
  b_params.mu_omega = 100.0;
  b_params.N = 400.0;
  b_params.tau = 0.05;
  b_params.f_norm = 1.0;
  double b_dh = 0.0;
  std::string b_output;
  sc_b->add_option("--k", b_params.k_norm, "kernel Schur norm")->check(CLI::PositiveNumber);
  sc_b->add_option("--eps", b_params.eps, "concentration level")->check(CLI::PositiveNumber);
  sc_b->add_option("--theta", b_params.theta, "Hoelder exponent");
  sc_b->add_option("--d-h", b_dh, "Hausdorff distance (0: skip C0)");
  sc_b->add_option("--mu", b_params.mu_omega, "domain measure")->check(CLI::PositiveNumber);
  sc_b->add_option("--N", b_params.N, "sample count");
  sc_b->add_option("--tau", b_params.tau, "failure budget")->check(CLI::PositiveNumber);
  sc_b->add_option("--sigma2", b_params.sigma2, "noise variance");
  sc_b->add_option("--f-norm", b_params.f_norm, "signal norm");
  sc_b->add_option("-o,--output", b_output, "output CSV path");

  // remark34
  auto* sc_r34 = app.add_subcommand("remark34", "indistinguishability demo in the hat space");
  int r34_R = 5, r34_iters = 3;
  std::vector<double> r34_delta = {0.1, 0.5};
  double r34_gap = 0.5;
  std::string r34_output;
  sc_r34->add_option("--R", r34_R, "concentration half-width")->check(CLI::Range(2, 1000));
  sc_r34->add_option("--delta", r34_delta, "exterior bump heights")->delimiter(',');
  sc_r34->add_option("--grid-gap", r34_gap, "interior grid spacing")->check(CLI::PositiveNumber);
  sc_r34->add_option("--iters", r34_iters, "iteration count")->check(CLI::NonNegativeNumber);
  sc_r34->add_option("-o,--output", r34_output, "output CSV path");

  // reconstruct-one
  auto* sc_one = app.add_subcommand("reconstruct-one", "single reconstruction trial");
  double one_L = 50.0, one_alpha = 0.0, one_noise = -1.0;
  std::string one_mode = "deterministic";
  int one_N = 400, one_iters = 6;
  CommonOpts one_common;
  sc_one->add_option("--L", one_L, "domain half-width");
  sc_one->add_option("--alpha", one_alpha, "decay exponent");
  sc_one->add_option("--mode", one_mode, "sampling mode")
      ->check(CLI::IsMember({"deterministic", "random", "noisy"}));
  sc_one->add_option("--N", one_N, "random sample count")->check(CLI::PositiveNumber);
  sc_one->add_option("--noise-amp", one_noise, "noise half-width (-1: default rule)");
  sc_one->add_option("--iters", one_iters, "iteration count")->check(CLI::NonNegativeNumber);
  add_common(sc_one, one_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_space->parsed()) return run_space_info(si_kind, si_lo, si_hi, si_jitter, si_output);
    if (sc_t1->parsed()) return run_table1(t1_L, t1_alpha, t1_iters, t1_trials, t1_common);
    if (sc_t2->parsed())
      return run_table2(t2_L, t2_alpha, t2_rules, t2_iters, t2_trials, t2_common);
    if (sc_ns->parsed()) return run_noise_sweep(ns_L, ns_alpha, ns_grid, ns_trials, ns_common);
    if (sc_cov->parsed()) return run_coverage(cov_L, cov_N, cov_d1, cov_trials, cov_common);
    if (sc_b->parsed()) return run_bounds(b_params, b_dh, b_output);
    if (sc_r34->parsed()) return run_remark34(r34_R, r34_delta, r34_gap, r34_iters, r34_output);
    if (sc_one->parsed())
      return run_reconstruct_one(one_L, one_alpha, one_mode, one_N, one_noise, one_iters,
                                 one_common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
