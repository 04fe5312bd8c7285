#pragma once

#include <vector>

#include "rks/kernel_space.hpp"
#include "rks/sampling.hpp"

namespace rks {

/// One weighted sample mu(I_gamma) f(gamma).
struct SampleRecord {
  double position = 0.0;
  double weight = 0.0;
  double value = 0.0;
};

/// Which samples of the target feed the preconstruction g_0 (the operator S
/// always evaluates the current iterate exactly on every node):
///   interior_only     — interior samples of f; f is treated as zero on the
///                       exterior grid.
///   oracle_everywhere — interior samples plus exact values of f on the
///                       exterior grid.
///   interior_noisy    — like interior_only, but the recorded values carry
///                       additive noise.
enum class ReconstructMode { interior_only, oracle_everywhere, interior_noisy };

struct ReconstructionRun {
  std::vector<Signal> iterates;        // g_0 .. g_n
  std::vector<double> residual_norms;  // ||g_k - g_{k-1}||_2, k = 1..n
  ReconstructMode mode = ReconstructMode::interior_only;
};

/// Caches the coefficient-space sampling operator M = B^T Phi W Phi^T so that
/// g -> S g and the iteration are dense mat-vecs.
class PreconstructionOperator {
 public:
  PreconstructionOperator(const KernelSpace& space, const SamplingSet& sampling);

  const KernelSpace& space() const { return *space_; }
  const SamplingSet& sampling() const { return *sampling_; }

  /// g_0 = sum_gamma mu(I_gamma) f(gamma) K(., gamma) from recorded interior
  /// samples.
  Signal preconstruct(const std::vector<SampleRecord>& samples) const;

  /// S g = sum over interior and exterior nodes of mu(I_gamma) g(gamma) K(., gamma),
  /// evaluating g exactly at every node.
  Signal apply_S(const Signal& g) const;

  /// Runs g_n = g_0 + g_{n-1} - S g_{n-1} for n_iters steps. Residual norms
  /// are computed through the difference recursion d_k = (I - M) d_{k-1} in
  /// the exact Gram norm. Throws std::runtime_error (with the iterate index)
  /// if a residual exceeds 1e6 * ||g_0||.
  ReconstructionRun iterate(const Signal& g0, int n_iters, ReconstructMode mode) const;

 private:
  const KernelSpace* space_;
  const SamplingSet* sampling_;
  Eigen::MatrixXd M_;  // B Phi W Phi^T over all nodes
};

/// Samples f with Voronoi weights on the interior nodes and, for
/// oracle_everywhere, gap weights on the exterior grid. In interior_noisy
/// mode the recorded values get i.i.d. uniform [-noise_amp, noise_amp]
/// perturbations drawn from rng.
std::vector<SampleRecord> record_samples(const KernelSpace& space, const SamplingSet& sampling,
                                         const Signal& f, ReconstructMode mode,
                                         double noise_amp = 0.0, Rng* rng = nullptr);

enum class IterationRule { general, simplified };

/// Smallest admissible iteration count n:
///   general:    n + 1 >= (ln(1/eps) - ln k) / (theta ln(1/d_h) - 2 ln k)
///   simplified: n + 1 >= (ln(1/eps) - ln k) / ln 2
/// Returns 0 when eps >= 1/k; throws std::domain_error when the denominator
/// of the general rule is <= 0.
int required_iterations(double eps, double k_norm, double theta, double d_h, IterationRule rule);

/// ||g - f||_2 / ||f||_2 via quadrature; throws on a zero reference signal.
double rae(const KernelSpace& space, const Signal& g, const Signal& f);

/// The three quantities in the sampled-norm stability chain for an
/// eps-concentrated pair (f, g):
///   lower  = (1 - eps - k d_h^theta) ||f - g||_2 - 2 eps min(||f||, ||g||)
///            (meaningful under the hypothesis d_h < ((1 - eps)/k)^{1/theta})
///   middle = weighted sample norm of f - g on the interior nodes
///   upper  = (1 + k d_h^theta) ||f - g||_2        (unconditional)
struct StabilityMargins {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  bool hypothesis_holds = false;  // d_h < ((1 - eps)/k)^{1/theta}
  bool chain_holds = false;
};

StabilityMargins stability_margins(const KernelSpace& space, const SamplingSet& sampling,
                                   const Signal& f, const Signal& g, double eps);

}  // namespace rks
