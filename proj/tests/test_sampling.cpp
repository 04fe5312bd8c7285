#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "rks/sampling.hpp"

using namespace rks;

TEST_CASE("Voronoi weights: closed forms and total measure") {
  const double L = 5.0;
  const std::vector<double> pts = {-4.0, -1.0, 0.5, 3.0};
  const auto w = voronoi_weights(pts, L);
  CHECK(w[0] == doctest::Approx(L + 0.5 * (-4.0 + -1.0)));
  CHECK(w[1] == doctest::Approx(0.5 * (0.5 - -4.0)));
  CHECK(w[2] == doctest::Approx(0.5 * (3.0 - -1.0)));
  CHECK(w[3] == doctest::Approx(L - 0.5 * (3.0 + 0.5)));
  CHECK(std::accumulate(w.begin(), w.end(), 0.0) == doctest::Approx(2.0 * L).epsilon(1e-14));
}

TEST_CASE("Voronoi weights: one and two points") {
  CHECK(voronoi_weights({0.3}, 2.0)[0] == doctest::Approx(4.0));
  const auto w = voronoi_weights({-1.0, 1.0}, 2.0);
  CHECK(w[0] == doctest::Approx(2.0));
  CHECK(w[1] == doctest::Approx(2.0));
}

TEST_CASE("Hausdorff distance is the maximal gap half-width or edge distance") {
  const double L = 5.0;
  const std::vector<double> pts = {-4.0, -1.0, 0.5, 3.0};
  // edge distances 1 and 2; half-gaps 1.5, 0.75, 1.25
  CHECK(hausdorff_distance(pts, L) == doctest::Approx(2.0));
  CHECK(hausdorff_distance({0.0}, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("interior_from_positions sorts, merges and validates") {
  const SamplingSet set = interior_from_positions({1.0, -1.0, 1.0, 0.0}, 2.0);
  CHECK(set.interior == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(set.interior_weights.size() == 3);
  CHECK(set.hausdorff == doctest::Approx(1.0));
  CHECK_THROWS_AS(interior_from_positions({3.0}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(interior_from_positions({}, 2.0), std::invalid_argument);
}

TEST_CASE("gap-process interior set respects its gap law") {
  Rng rng(42);
  for (int rep = 0; rep < 50; ++rep) {
    const double L = 10.0;
    const SamplingSet set = deterministic_interior(L, rng);
    REQUIRE(set.interior.size() >= 2);
    CHECK(set.interior.front() >= -L + 0.25 - 1e-12);
    CHECK(set.interior.front() <= -L + 0.375 + 1e-12);
    CHECK(L - set.interior.back() <= 0.25 + 1e-12);
    CHECK(L - set.interior.back() >= -1e-12);
    for (std::size_t k = 0; k + 1 < set.interior.size(); ++k) {
      const double gap = set.interior[k + 1] - set.interior[k];
      CHECK(gap >= 0.25 - 1e-12);
      CHECK(gap <= 0.75 + 1e-12);
    }
    CHECK(set.hausdorff <= 0.375 + 1e-12);
    CHECK(std::accumulate(set.interior_weights.begin(), set.interior_weights.end(), 0.0) ==
          doctest::Approx(2.0 * L).epsilon(1e-12));
  }
}

TEST_CASE("random interior positions are sorted and in range") {
  Rng rng(7);
  const SamplingSet set = random_interior(3.0, 100, rng);
  CHECK(set.interior.size() == 100);  // coincidences have probability zero
  CHECK(std::is_sorted(set.interior.begin(), set.interior.end()));
  CHECK(set.interior.front() >= -3.0);
  CHECK(set.interior.back() <= 3.0);
}

TEST_CASE("exterior grid has the mirrored half-offset layout") {
  const auto pts = exterior_grid(2.0, 0.5, 1.6);  // ceil(1.6/0.5) = 4 per side
  REQUIRE(pts.size() == 8);
  CHECK(pts[4] == doctest::Approx(2.25));
  CHECK(pts[5] == doctest::Approx(2.75));
  CHECK(pts[0] == doctest::Approx(-3.75));
  for (std::size_t k = 0; k < pts.size(); ++k) CHECK(pts[k] == doctest::Approx(-pts[pts.size() - 1 - k]));

  SamplingSet set = interior_from_positions({0.0}, 2.0);
  attach_exterior(set, 0.5, 1.6);
  CHECK(set.exterior.size() == 8);
  CHECK(set.exterior_gap == doctest::Approx(0.5));
}

TEST_CASE("weighted sample norm") {
  const std::vector<double> v = {1.0, -2.0};
  const std::vector<double> w = {0.5, 0.25};
  CHECK(weighted_sample_norm(v, w) == doctest::Approx(std::sqrt(0.5 + 1.0)));
  const std::vector<double> w_bad = {0.5};
  CHECK_THROWS_AS(weighted_sample_norm(v, w_bad), std::invalid_argument);
}

TEST_CASE("coverage bound matches the closed form") {
  TheoryParams params;
  params.mu_omega = 100.0;
  const CoverageBound b = coverage_bound(params, 1.0, 10000);
  CHECK(b.raw == doctest::Approx(0.045173345977).epsilon(1e-9));
  CHECK(b.clamped == doctest::Approx(b.raw));
  const CoverageBound small = coverage_bound(params, 1.0, 0);
  CHECK(small.raw == doctest::Approx(1000.0));
  CHECK(small.clamped == doctest::Approx(1.0));
}

TEST_CASE("empirical coverage is deterministic in the master seed and sane") {
  const double a = empirical_coverage(5.0, 40, 1.0, 200, 99);
  const double b = empirical_coverage(5.0, 40, 1.0, 200, 99);
  CHECK(a == b);
  CHECK(a >= 0.0);
  CHECK(a <= 1.0);
  // larger N makes big gaps rarer
  const double dense = empirical_coverage(5.0, 400, 1.0, 200, 99);
  CHECK(dense <= a + 1e-12);
}
