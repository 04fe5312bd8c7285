#pragma once

#include <stdexcept>

namespace rks {

/// Symbols feeding the closed-form stability / error / probability bounds.
struct TheoryParams {
  double theta = 1.0;   // Hoelder exponent of the kernel
  double k_norm = 0.0;  // ||K||_{S,theta}
  double eps = 0.0;     // concentration level
  int d = 1;            // dimension of the metric measure space
  double c = 0.5;       // Corkscrew ratio
  double D1 = 2.0;      // Ahlfors lower constant
  double D2 = 2.0;      // Ahlfors upper constant
  double mu_omega = 0.0;
  double N = 0.0;       // sampling size
  double tau = 0.0;     // failure probability budget
  double sigma2 = 0.0;  // noise variance
  double p = 2.0;       // norm exponent
  double f_norm = 0.0;  // ||f||_p
};

struct C0Result {
  double c0 = 0.0;
  double det_error_factor = 0.0;   // 4 c0 eps
  double noisy_noise_factor = 0.0; // c0
};

/// Amplification constant c0 = k / (1 - k^2 d_h^theta) and the deterministic /
/// noisy error factors. Throws std::domain_error when k^2 d_h^theta >= 1.
C0Result c0_and_error(const TheoryParams& params, double d_h);

struct RandomThresholds {
  double tau_of_N_raw = 0.0; // may exceed 1
  double tau_of_N = 0.0;     // clamped to [0, 1]
  double N0 = 0.0;           // sampling-inequality sample count
  double N1 = 0.0;           // reconstruction sample count
};

RandomThresholds random_thresholds(const TheoryParams& params);

struct NoiseThresholds {
  double delta1_tilde = 0.0;
  double N_min = 0.0;
};

NoiseThresholds noise_thresholds(const TheoryParams& params);

}  // namespace rks
