#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rks/bounds.hpp"
#include "rks/reconstruct.hpp"

using namespace rks;

namespace {
TheoryParams reference_params() {
  TheoryParams p;
  p.k_norm = 1.0;
  p.eps = 0.1;
  p.mu_omega = 100.0;
  p.N = 20000.0;
  p.tau = 0.05;
  p.f_norm = 1.0;
  return p;
}
}  // namespace

TEST_CASE("C0 and the error factors") {
  TheoryParams p = reference_params();
  const C0Result r = c0_and_error(p, 0.25);
  CHECK(r.c0 == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(r.det_error_factor == doctest::Approx(4.0 * (4.0 / 3.0) * 0.1).epsilon(1e-14));
  CHECK(r.noisy_noise_factor == doctest::Approx(r.c0));

  p.k_norm = 2.0;
  CHECK_THROWS_AS(c0_and_error(p, 0.25), std::domain_error);  // k^2 d_h = 1
  CHECK_THROWS_AS(c0_and_error(p, 0.5), std::domain_error);
}

TEST_CASE("random-sampling thresholds match independent evaluation") {
  const TheoryParams p = reference_params();
  const RandomThresholds r = random_thresholds(p);
  CHECK(r.tau_of_N_raw == doctest::Approx(0.09057306788).epsilon(1e-9));
  CHECK(r.tau_of_N == doctest::Approx(r.tau_of_N_raw));
  CHECK(r.N0 == doctest::Approx(42386.53893238).epsilon(1e-9));
  CHECK(r.N1 == doctest::Approx(21193.26946619).epsilon(1e-9));
}

TEST_CASE("tau(mu, N) clamps to [0, 1] for small N") {
  TheoryParams p = reference_params();
  p.N = 0.0;
  const RandomThresholds r = random_thresholds(p);
  CHECK(r.tau_of_N_raw == doctest::Approx(2000.0));
  CHECK(r.tau_of_N == doctest::Approx(1.0));
}

TEST_CASE("noise thresholds: variance-free cap and noisy branch") {
  TheoryParams p = reference_params();
  const NoiseThresholds cap = noise_thresholds(p);
  CHECK(cap.delta1_tilde == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(cap.N_min == doctest::Approx(21193.26946619).epsilon(1e-9));

  p.sigma2 = 0.04;
  const NoiseThresholds noisy = noise_thresholds(p);
  CHECK(noisy.delta1_tilde == doctest::Approx(0.00625).epsilon(1e-12));
  CHECK(noisy.N_min == doctest::Approx(2396585.818843).epsilon(1e-9));
}

TEST_CASE("required iteration counts") {
  // simplified rule: (ln(1/eps) - ln k)/ln 2 = ln 5 / ln 2 = 2.3219 -> n = 2
  CHECK(required_iterations(0.2, 1.0, 1.0, 0.25, IterationRule::simplified) == 2);
  // exact integer threshold: eps = 1/4, k = 1 -> ratio 2 -> n = 1
  CHECK(required_iterations(0.25, 1.0, 1.0, 0.25, IterationRule::simplified) == 1);
  // general rule: ln 5 / (ln 4) = 1.1609 -> n = 1
  CHECK(required_iterations(0.2, 1.0, 1.0, 0.25, IterationRule::general) == 1);
  // eps >= 1/k -> no iterations needed
  CHECK(required_iterations(0.9, 1.0, 1.0, 0.25, IterationRule::general) == 0);
  CHECK(required_iterations(2.0, 1.0, 1.0, 0.25, IterationRule::simplified) == 0);
  // infeasible: theta ln(1/d_h) <= 2 ln k
  CHECK_THROWS_AS(required_iterations(0.1, 3.0, 1.0, 0.5, IterationRule::general),
                  std::domain_error);
  CHECK_THROWS_AS(required_iterations(0.0, 1.0, 1.0, 0.5, IterationRule::general),
                  std::invalid_argument);
}
