#include "rks/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace rks {

C0Result c0_and_error(const TheoryParams& params, double d_h) {
  const double contraction = params.k_norm * params.k_norm * std::pow(d_h, params.theta);
  if (!(contraction < 1.0))
    throw std::domain_error("hypothesis violated: k_norm^2 * d_h^theta >= 1");
  C0Result out;
  out.c0 = params.k_norm / (1.0 - contraction);
  out.det_error_factor = 4.0 * out.c0 * params.eps;
  out.noisy_noise_factor = out.c0;
  return out;
}

RandomThresholds random_thresholds(const TheoryParams& params) {
  const double d = params.d;
  const double k = params.k_norm;
  const double cdD1 = std::pow(params.c, d) * params.D1;

  RandomThresholds out;

  // tau(mu(Omega), N) with base constant 10^d (2 k^2)^{d/theta} mu / (c^d D1)
  const double base1 = std::pow(10.0, d) * std::pow(2.0 * k * k, d / params.theta) *
                       params.mu_omega / cdD1;
  out.tau_of_N_raw = base1 * std::pow(1.0 - 1.0 / base1, params.N);
  out.tau_of_N = std::clamp(out.tau_of_N_raw, 0.0, 1.0);

  // N0: 5^d 2^{d+1+d/theta} k^{d/theta} mu / (c^d D1)
  //     * ln(10^d (2k)^{d/theta} mu / (c^d D1 tau))
  const double n0_pre = std::pow(5.0, d) * std::pow(2.0, d + 1.0 + d / params.theta) *
                        std::pow(k, d / params.theta) * params.mu_omega / cdD1;
  const double n0_log = std::pow(10.0, d) * std::pow(2.0 * k, d / params.theta) *
                        params.mu_omega / (cdD1 * params.tau);
  out.N0 = n0_pre * std::log(n0_log);

  // N1: base1 * ln(base1 / tau)
  out.N1 = base1 * std::log(base1 / params.tau);
  return out;
}

NoiseThresholds noise_thresholds(const TheoryParams& params) {
  const double d = params.d;
  const double k = params.k_norm;
  const double cap = std::pow(2.0 * k * k, -1.0 / params.theta);
  NoiseThresholds out;
  if (params.sigma2 > 0.0) {
    const double noise_branch =
        std::pow(params.tau * params.eps * params.eps * params.f_norm * params.f_norm /
                     (params.sigma2 * params.D2 * std::pow(params.D1, 2.0 / params.p - 1.0)),
                 1.0 / d);
    out.delta1_tilde = std::min(cap, noise_branch);
  } else {
    out.delta1_tilde = cap;
  }
  const double cdD1 = std::pow(params.c, d) * params.D1;
  const double pre = std::pow(10.0, d) * params.mu_omega /
                     (cdD1 * std::pow(out.delta1_tilde, d));
  out.N_min = pre * std::log(pre / params.tau);
  return out;
}

}  // namespace rks
