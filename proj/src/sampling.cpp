#include "rks/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rks {

std::vector<double> voronoi_weights(const std::vector<double>& positions, double L) {
  const std::size_t n = positions.size();
  if (n == 0) throw std::invalid_argument("voronoi_weights: empty position set");
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 2.0 * L;
    return w;
  }
  w[0] = L + 0.5 * (positions[0] + positions[1]);
  w[n - 1] = L - 0.5 * (positions[n - 1] + positions[n - 2]);
  for (std::size_t k = 1; k + 1 < n; ++k)
    w[k] = 0.5 * (positions[k + 1] - positions[k - 1]);
  return w;
}

double hausdorff_distance(const std::vector<double>& positions, double L) {
  if (positions.empty()) throw std::invalid_argument("hausdorff_distance: empty position set");
  double d = std::max(positions.front() + L, L - positions.back());
  for (std::size_t k = 0; k + 1 < positions.size(); ++k)
    d = std::max(d, 0.5 * (positions[k + 1] - positions[k]));
  return d;
}

SamplingSet interior_from_positions(std::vector<double> positions, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("interior L must be > 0");
  if (positions.empty()) throw std::invalid_argument("interior position set is empty");
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  for (double g : positions)
    if (std::abs(g) > L) throw std::invalid_argument("interior position outside [-L, L]");

  SamplingSet set;
  set.L = L;
  set.interior_weights = voronoi_weights(positions, L);
  set.hausdorff = hausdorff_distance(positions, L);
  set.interior = std::move(positions);
  return set;
}

SamplingSet deterministic_interior(double L, Rng& rng) {
  if (!(L > 0.0)) throw std::invalid_argument("interior L must be > 0");
  std::vector<double> pts;
  pts.push_back(-L + rng.uniform(0.25, 0.375));
  while (true) {
    const double cand = pts.back() + rng.uniform(0.25, 0.75);
    if (cand > L) continue;  // redraw the terminal gap
    if (L - cand <= 0.25) {
      pts.push_back(cand);
      break;
    }
    pts.push_back(cand);
  }
  return interior_from_positions(std::move(pts), L);
}

SamplingSet random_interior(double L, int N, Rng& rng) {
  if (!(L > 0.0)) throw std::invalid_argument("interior L must be > 0");
  if (N < 1) throw std::invalid_argument("random interior needs N >= 1");
  std::vector<double> pts(static_cast<std::size_t>(N));
  for (double& g : pts) g = rng.uniform(-L, L);
  return interior_from_positions(std::move(pts), L);
}

std::vector<double> exterior_grid(double L, double gap, double extent) {
  if (!(gap > 0.0)) throw std::invalid_argument("exterior gap must be > 0");
  if (!(extent > 0.0)) throw std::invalid_argument("exterior extent must be > 0");
  const int m_count = static_cast<int>(std::ceil(extent / gap));
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(2 * m_count));
  for (int m = m_count - 1; m >= 0; --m) pts.push_back(-(L + (m + 0.5) * gap));
  for (int m = 0; m < m_count; ++m) pts.push_back(L + (m + 0.5) * gap);
  return pts;
}

void attach_exterior(SamplingSet& set, double gap, double extent) {
  set.exterior = exterior_grid(set.L, gap, extent);
  set.exterior_gap = gap;
}

double weighted_sample_norm(std::span<const double> values, std::span<const double> weights) {
  if (values.size() != weights.size())
    throw std::invalid_argument("values/weights length mismatch");
  double acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) acc += values[k] * values[k] * weights[k];
  return std::sqrt(std::max(0.0, acc));
}

CoverageBound coverage_bound(const TheoryParams& params, double delta1, int N) {
  if (!(delta1 > 0.0)) throw std::invalid_argument("delta1 must be > 0");
  const double d = params.d;
  const double cell = std::pow(params.c, d) * params.D1 * std::pow(delta1, d);
  const double pre = std::pow(10.0, d) * params.mu_omega / cell;
  CoverageBound out;
  out.raw = pre * std::pow(1.0 - 1.0 / pre, N);
  out.clamped = std::clamp(out.raw, 0.0, 1.0);
  return out;
}

double empirical_coverage(double L, int N, double delta1, int trials, std::uint64_t master_seed) {
  if (trials < 1) throw std::invalid_argument("empirical coverage needs trials >= 1");
  int misses = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(t) + 1));
    const SamplingSet set = random_interior(L, N, rng);
    if (set.hausdorff > delta1) ++misses;
  }
  return static_cast<double>(misses) / trials;
}

}  // namespace rks
