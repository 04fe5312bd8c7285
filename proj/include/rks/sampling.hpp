#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rks/bounds.hpp"
#include "rks/rng.hpp"

namespace rks {

/// The 1-D concentration domain Omega = [-L, L] with its fixed metric-measure
/// constants.
struct Domain1D {
  double L = 1.0;
  static constexpr double corkscrew_c = 0.5;
  static constexpr int dim = 1;
  static constexpr double D1 = 2.0;
  static constexpr double D2 = 2.0;
  double measure() const { return 2.0 * L; }
};

/// Interior sampling positions with Voronoi weights, plus a symmetric
/// exterior grid gamma_m^+- = +-(L + (m + 1/2) gap).
struct SamplingSet {
  double L = 0.0;
  std::vector<double> interior;          // strictly increasing, inside [-L, L]
  std::vector<double> interior_weights;  // |I_gamma|, sum = 2L
  std::vector<double> exterior;
  double exterior_gap = 0.0;
  double hausdorff = 0.0;  // d_H(Gamma_Omega, Omega)
};

/// Voronoi cell measures: first = L + (g1+g2)/2, last = L - (gN+g_{N-1})/2,
/// middle = (g_{k+1} - g_{k-1})/2. A single point owns the whole domain.
std::vector<double> voronoi_weights(const std::vector<double>& positions, double L);

/// max(g1 + L, L - gN, max_k (g_{k+1} - g_k)/2).
double hausdorff_distance(const std::vector<double>& positions, double L);

/// Builds interior set (weights + Hausdorff distance) from given positions;
/// coincident positions are merged. Also serves as the test hook for forced
/// gap configurations.
SamplingSet interior_from_positions(std::vector<double> positions, double L);

/// Gap-process sampling set: successive i.i.d. uniform gaps on [1/4, 3/4]
/// (first gap on [1/4, 3/8]), final gap to L rejected/redrawn until it lands
/// in [0, 1/4]. Guarantees d_H <= 3/8.
SamplingSet deterministic_interior(double L, Rng& rng);

/// N i.i.d. uniform positions on [-L, L], sorted.
SamplingSet random_interior(double L, int N, Rng& rng);

std::vector<double> exterior_grid(double L, double gap, double extent);

/// Attaches the symmetric exterior grid to an interior set.
void attach_exterior(SamplingSet& set, double gap, double extent);

/// (sum |h(gamma)|^2 mu(I_gamma))^{1/2}.
double weighted_sample_norm(std::span<const double> values, std::span<const double> weights);

struct CoverageBound {
  double raw = 0.0;      // may exceed 1 for small N
  double clamped = 0.0;  // in [0, 1]
};

/// Tail bound on P{d_H(Gamma_Omega, Omega) > delta1} for N i.i.d. uniform
/// positions:  (10^d mu / (c^d D1 delta1^d)) (1 - c^d D1 delta1^d / (10^d mu))^N.
CoverageBound coverage_bound(const TheoryParams& params, double delta1, int N);

/// Monte Carlo frequency of the event d_H > delta1 over fresh random interior
/// draws; per-trial seeds derived from master_seed.
double empirical_coverage(double L, int N, double delta1, int trials, std::uint64_t master_seed);

}  // namespace rks
