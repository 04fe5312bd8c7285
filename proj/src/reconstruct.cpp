#include "rks/reconstruct.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rks {

PreconstructionOperator::PreconstructionOperator(const KernelSpace& space,
                                                 const SamplingSet& sampling)
    : space_(&space), sampling_(&sampling) {
  if (sampling.interior.empty())
    throw std::invalid_argument("sampling set has no interior nodes");
  const int n = space.size();
  Eigen::MatrixXd phi_w_phit = Eigen::MatrixXd::Zero(n, n);
  auto accumulate = [&](double pos, double w) {
    const Eigen::VectorXd phi = space.basis_at(pos);
    phi_w_phit.noalias() += w * phi * phi.transpose();
  };
  for (std::size_t k = 0; k < sampling.interior.size(); ++k)
    accumulate(sampling.interior[k], sampling.interior_weights[k]);
  for (double pos : sampling.exterior) accumulate(pos, sampling.exterior_gap);
  M_ = space.gram_inverse() * phi_w_phit;
}

Signal PreconstructionOperator::preconstruct(const std::vector<SampleRecord>& samples) const {
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(space_->size());
  for (const SampleRecord& s : samples)
    rhs.noalias() += (s.weight * s.value) * space_->basis_at(s.position);
  return Signal{space_->gram_inverse() * rhs};
}

Signal PreconstructionOperator::apply_S(const Signal& g) const {
  return Signal{M_ * g.coeffs};
}

ReconstructionRun PreconstructionOperator::iterate(const Signal& g0, int n_iters,
                                                   ReconstructMode mode) const {
  if (n_iters < 0) throw std::invalid_argument("iteration count must be >= 0");
  ReconstructionRun run;
  run.mode = mode;
  run.iterates.reserve(static_cast<std::size_t>(n_iters) + 1);
  run.iterates.push_back(g0);
  run.residual_norms.reserve(static_cast<std::size_t>(n_iters));

  const double guard = 1e6 * space_->gram_norm(g0);
  Eigen::VectorXd diff = g0.coeffs - M_ * g0.coeffs;  // g_1 - g_0
  for (int k = 1; k <= n_iters; ++k) {
    run.iterates.push_back(Signal{run.iterates.back().coeffs + diff});
    const double r = space_->gram_norm(Signal{diff});
    run.residual_norms.push_back(r);
    if (r > guard)
      throw std::runtime_error("reconstruction diverged at iterate " + std::to_string(k) +
                               " (residual " + std::to_string(r) + ")");
    if (k < n_iters) diff -= M_ * diff;
  }
  return run;
}

std::vector<SampleRecord> record_samples(const KernelSpace& space, const SamplingSet& sampling,
                                         const Signal& f, ReconstructMode mode, double noise_amp,
                                         Rng* rng) {
  if (mode == ReconstructMode::interior_noisy && noise_amp > 0.0 && rng == nullptr)
    throw std::invalid_argument("noisy sampling needs an rng");
  std::vector<SampleRecord> out;
  out.reserve(sampling.interior.size() + sampling.exterior.size());
  for (std::size_t k = 0; k < sampling.interior.size(); ++k) {
    double v = space.eval(f, sampling.interior[k]);
    if (mode == ReconstructMode::interior_noisy && noise_amp > 0.0)
      v += rng->uniform(-noise_amp, noise_amp);
    out.push_back({sampling.interior[k], sampling.interior_weights[k], v});
  }
  if (mode == ReconstructMode::oracle_everywhere)
    for (double pos : sampling.exterior)
      out.push_back({pos, sampling.exterior_gap, space.eval(f, pos)});
  return out;
}

int required_iterations(double eps, double k_norm, double theta, double d_h, IterationRule rule) {
  if (!(eps > 0.0) || !(k_norm > 0.0) || !(d_h > 0.0))
    throw std::invalid_argument("eps, k_norm and d_h must be > 0");
  const double numer = std::log(1.0 / eps) - std::log(k_norm);
  if (numer <= 0.0) return 0;
  double denom;
  if (rule == IterationRule::general) {
    denom = theta * std::log(1.0 / d_h) - 2.0 * std::log(k_norm);
    if (denom <= 0.0)
      throw std::domain_error("iteration rule infeasible: theta ln(1/d_h) <= 2 ln k");
  } else {
    denom = std::log(2.0);
  }
  const double ratio = numer / denom;
  const int n = static_cast<int>(std::ceil(ratio)) - 1;
  return n < 0 ? 0 : n;
}

double rae(const KernelSpace& space, const Signal& g, const Signal& f) {
  const double ref = space.l2_norm(f, Region::whole_line);
  if (!(ref > 0.0)) throw std::domain_error("relative error is undefined for a zero reference");
  const Signal diff{g.coeffs - f.coeffs};
  return space.l2_norm(diff, Region::whole_line) / ref;
}

StabilityMargins stability_margins(const KernelSpace& space, const SamplingSet& sampling,
                                   const Signal& f, const Signal& g, double eps) {
  const Signal diff{f.coeffs - g.coeffs};
  const double norm = space.gram_norm(diff);

  std::vector<double> values(sampling.interior.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = space.eval(diff, sampling.interior[k]);

  const SchurEstimate& schur = space.schur();
  const double drift = schur.combined * std::pow(sampling.hausdorff, schur.holder_theta);
  const double fg_min = std::min(space.gram_norm(f), space.gram_norm(g));

  StabilityMargins out;
  out.middle = weighted_sample_norm(values, sampling.interior_weights);
  out.lower = (1.0 - eps - drift) * norm - 2.0 * eps * fg_min;
  out.upper = (1.0 + drift) * norm;
  out.hypothesis_holds =
      eps < 1.0 && sampling.hausdorff <
                       std::pow((1.0 - eps) / schur.combined, 1.0 / schur.holder_theta);
  const bool upper_ok = out.middle <= out.upper;
  const bool lower_ok = !out.hypothesis_holds || out.lower <= out.middle;
  out.chain_holds = upper_ok && lower_ok;
  return out;
}

}  // namespace rks
