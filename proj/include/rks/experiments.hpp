#pragma once

#include <cstdint>
#include <vector>

#include "rks/kernel_space.hpp"
#include "rks/reconstruct.hpp"
#include "rks/sampling.hpp"

namespace rks {

enum class SamplingMode { deterministic, random, random_noisy };

/// One Monte Carlo campaign cell.
struct ExperimentSpec {
  double L = 50.0;
  double alpha = 0.0;
  int n_iters = 6;
  int trials = 50;
  SamplingMode mode = SamplingMode::deterministic;
  int N = 0;               // sample count for the random modes
  double noise_amp = 0.0;  // uniform noise half-width for random_noisy
  std::uint64_t master_seed = 0;
  int success_iter = -1;   // -1: 3 for deterministic, 6 for random modes
  double exterior_extent = 10.0;
  int index_pad = 20;      // basis indices extend to +-(L + index_pad)
  int threads = 0;         // 0: RKS_THREADS / hardware

  void validate() const;
  int effective_success_iter() const;
};

struct TrialResult {
  std::vector<double> rae_by_iter;  // E(0), ..., E(n_iters)
  double concentration_measured = 0.0;
  double eps_target = 0.0;
  double hausdorff = 0.0;
  bool success = false;
  std::uint64_t seed = 0;
};

/// f = sum_{|i| <= L} r_i (1 + |i|)^{-alpha} phi_i with r_i uniform on
/// [-1, -1/2] union [1/2, 1].
Signal make_concentrated_signal(const KernelSpace& space, double L, double alpha, Rng& rng);

/// Target concentration ratio C_alpha L^{-max(alpha, 1/2)}; alpha must be one
/// of {0, 0.2, 0.4, 0.6, 0.8}.
double epsilon_target(double L, double alpha);

/// Gaussian space covering [-(L + pad), L + pad], jitter seeded from the
/// campaign master seed.
KernelSpace make_campaign_space(const ExperimentSpec& spec);

/// Runs the campaign; one result per trial, keyed by trial index. Per-trial
/// seeds derive from (master_seed, index), so results are independent of the
/// worker count.
std::vector<TrialResult> run_campaign(const ExperimentSpec& spec, const KernelSpace& space);
std::vector<TrialResult> run_campaign(const ExperimentSpec& spec);

double aggregate_mean_rae(const std::vector<TrialResult>& results, int iter);
double aggregate_success_rate_pct(const std::vector<TrialResult>& results);

struct Remark34Result {
  double max_pair_error = 0.0;  // max(||g - f_+||_2, ||g - f_-||_2)
  double eps_measured = 0.0;    // concentration ratio of f_+- on [-R, R]
  double pair_norm = 0.0;       // ||f_+-||_2
  bool reconstructions_identical = false;
  Signal reconstruction;        // common reconstruction
};

/// Indistinguishability demo in a hat space: f_+- = e_0 +- delta e_{R+1}
/// coincide on [-R, R], so interior-only reconstructions are identical and at
/// least one of them misses its target by delta ||h||_2.
Remark34Result remark34_demo(const KernelSpace& space, int R, double delta,
                             const SamplingSet& sampling, int n_iters = 3);

struct NoisePoint {
  int N = 0;
  double mean_rae = 0.0;  // at the success iteration
};

/// Mean RAE at n = 6 versus sample count for noisy random campaigns at the
/// default amplitude L^{min(1/2 - alpha, 0)} / 2.
std::vector<NoisePoint> noise_sweep(double L, double alpha, const std::vector<int>& N_grid,
                                    int trials, std::uint64_t master_seed);

double default_noise_amp(double L, double alpha);

}  // namespace rks
