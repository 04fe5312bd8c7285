#include "rks/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rks/parallel.hpp"

namespace rks {

void ExperimentSpec::validate() const {
  if (!(L >= 1.0)) throw std::invalid_argument("L must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (n_iters < 0) throw std::invalid_argument("n_iters must be >= 0");
  if (mode != SamplingMode::deterministic && N < 1)
    throw std::invalid_argument("random modes need N >= 1");
  if (mode == SamplingMode::random_noisy && !(noise_amp >= 0.0))
    throw std::invalid_argument("noise amplitude must be >= 0");
  if (!(exterior_extent > 0.0)) throw std::invalid_argument("exterior extent must be > 0");
  if (index_pad < 1) throw std::invalid_argument("index pad must be >= 1");
}

int ExperimentSpec::effective_success_iter() const {
  const int def = mode == SamplingMode::deterministic ? 3 : 6;
  const int it = success_iter >= 0 ? success_iter : def;
  return std::min(it, n_iters);
}

Signal make_concentrated_signal(const KernelSpace& space, double L, double alpha, Rng& rng) {
  const int iL = static_cast<int>(std::floor(L));
  if (space.index_lo() > -iL || space.index_hi() < iL)
    throw std::invalid_argument("space index range does not contain [-L, L]");
  Signal f = space.zero_signal();
  for (int i = -iL; i <= iL; ++i) {
    const double mag = rng.uniform(0.5, 1.0);
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    f.coeffs(i - space.index_lo()) = sign * mag * std::pow(1.0 + std::abs(i), -alpha);
  }
  return f;
}

double epsilon_target(double L, double alpha) {
  struct Entry {
    double alpha;
    double c;
  };
  static constexpr Entry table[] = {{0.0, 1.15}, {0.2, 1.0}, {0.4, 0.75}, {0.6, 0.80}, {0.8, 1.45}};
  for (const Entry& e : table)
    if (std::abs(alpha - e.alpha) < 1e-12)
      return e.c * std::pow(L, -std::max(alpha, 0.5));
  throw std::invalid_argument("no tabulated concentration constant for alpha = " +
                              std::to_string(alpha));
}

KernelSpace make_campaign_space(const ExperimentSpec& spec) {
  spec.validate();
  const int hi = static_cast<int>(std::floor(spec.L)) + spec.index_pad;
  return KernelSpace::make(GeneratorKind::gaussian, -hi, hi,
                           derive_seed(spec.master_seed, 0));
}

std::vector<TrialResult> run_campaign(const ExperimentSpec& spec, const KernelSpace& space) {
  spec.validate();
  const double eps = epsilon_target(spec.L, spec.alpha);
  const double gap = eps / 2.0;
  const int success_iter = spec.effective_success_iter();

  std::vector<TrialResult> results(static_cast<std::size_t>(spec.trials));
  parallel_for(
      spec.trials,
      [&](int t) {
        const std::uint64_t seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(t) + 1);
        Rng rng(seed);
        try {
          const Signal f = make_concentrated_signal(space, spec.L, spec.alpha, rng);

          SamplingSet sampling = spec.mode == SamplingMode::deterministic
                                     ? deterministic_interior(spec.L, rng)
                                     : random_interior(spec.L, spec.N, rng);
          attach_exterior(sampling, gap, spec.exterior_extent);

          const ReconstructMode rmode = spec.mode == SamplingMode::random_noisy
                                            ? ReconstructMode::interior_noisy
                                            : ReconstructMode::interior_only;
          const PreconstructionOperator op(space, sampling);
          const auto samples = record_samples(space, sampling, f, rmode, spec.noise_amp, &rng);
          const ReconstructionRun run = op.iterate(op.preconstruct(samples), spec.n_iters, rmode);

          TrialResult& out = results[static_cast<std::size_t>(t)];
          out.seed = seed;
          out.eps_target = eps;
          out.hausdorff = sampling.hausdorff;
          out.concentration_measured = space.concentration_ratio(f, spec.L);
          out.rae_by_iter.reserve(run.iterates.size());
          for (const Signal& g : run.iterates) out.rae_by_iter.push_back(rae(space, g, f));
          out.success = out.rae_by_iter[static_cast<std::size_t>(success_iter)] <= eps;
        } catch (const std::exception& e) {
          throw std::runtime_error("trial " + std::to_string(t) + ": " + e.what());
        }
      },
      spec.threads);
  return results;
}

std::vector<TrialResult> run_campaign(const ExperimentSpec& spec) {
  return run_campaign(spec, make_campaign_space(spec));
}

double aggregate_mean_rae(const std::vector<TrialResult>& results, int iter) {
  if (results.empty()) throw std::invalid_argument("no trial results to aggregate");
  double acc = 0.0;
  for (const TrialResult& r : results) acc += r.rae_by_iter.at(static_cast<std::size_t>(iter));
  return acc / static_cast<double>(results.size());
}

double aggregate_success_rate_pct(const std::vector<TrialResult>& results) {
  if (results.empty()) throw std::invalid_argument("no trial results to aggregate");
  int wins = 0;
  for (const TrialResult& r : results) wins += r.success ? 1 : 0;
  return 100.0 * wins / static_cast<double>(results.size());
}

Remark34Result remark34_demo(const KernelSpace& space, int R, double delta,
                             const SamplingSet& sampling, int n_iters) {
  if (space.generator().kind != GeneratorKind::hat)
    throw std::invalid_argument("the indistinguishability demo needs a hat space");
  if (R < 2) throw std::invalid_argument("R must be >= 2");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0, 1)");
  if (space.index_lo() > 0 || space.index_hi() < R + 2)
    throw std::invalid_argument("space index range does not contain [0, R + 2]");
  if (!sampling.interior.empty() &&
      (sampling.interior.front() < -R || sampling.interior.back() > R))
    throw std::invalid_argument("sampling positions must lie inside [-R, R]");

  Signal f_plus = space.zero_signal();
  f_plus.coeffs(-space.index_lo()) = 1.0;
  Signal f_minus = f_plus;
  f_plus.coeffs(R + 1 - space.index_lo()) = delta;
  f_minus.coeffs(R + 1 - space.index_lo()) = -delta;

  const PreconstructionOperator op(space, sampling);
  auto reconstruct = [&](const Signal& f) {
    const auto samples = record_samples(space, sampling, f, ReconstructMode::interior_only);
    return op.iterate(op.preconstruct(samples), n_iters, ReconstructMode::interior_only)
        .iterates.back();
  };
  const Signal g_plus = reconstruct(f_plus);
  const Signal g_minus = reconstruct(f_minus);

  Remark34Result out;
  out.reconstructions_identical = g_plus.coeffs == g_minus.coeffs;
  out.reconstruction = g_plus;
  out.pair_norm = space.l2_norm(f_plus, Region::whole_line);
  out.eps_measured = space.concentration_ratio(f_plus, static_cast<double>(R));
  const Signal d_plus{g_plus.coeffs - f_plus.coeffs};
  const Signal d_minus{g_plus.coeffs - f_minus.coeffs};
  out.max_pair_error = std::max(space.l2_norm(d_plus, Region::whole_line),
                                space.l2_norm(d_minus, Region::whole_line));
  return out;
}

double default_noise_amp(double L, double alpha) {
  return 0.5 * std::pow(L, std::min(0.5 - alpha, 0.0));
}

std::vector<NoisePoint> noise_sweep(double L, double alpha, const std::vector<int>& N_grid,
                                    int trials, std::uint64_t master_seed) {
  if (!std::is_sorted(N_grid.begin(), N_grid.end()))
    throw std::invalid_argument("the N grid must be increasing");
  std::vector<NoisePoint> curve;
  curve.reserve(N_grid.size());
  ExperimentSpec spec;
  spec.L = L;
  spec.alpha = alpha;
  spec.trials = trials;
  spec.mode = SamplingMode::random_noisy;
  spec.noise_amp = default_noise_amp(L, alpha);
  spec.n_iters = 6;
  spec.master_seed = master_seed;
  spec.N = N_grid.empty() ? 1 : N_grid.front();
  const KernelSpace space = make_campaign_space(spec);
  for (std::size_t i = 0; i < N_grid.size(); ++i) {
    spec.N = N_grid[i];
    spec.master_seed = derive_seed(master_seed, 1000 + i);
    const auto results = run_campaign(spec, space);
    curve.push_back({N_grid[i], aggregate_mean_rae(results, spec.effective_success_iter())});
  }
  return curve;
}

}  // namespace rks
