#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "hvc/contribution.hpp"
#include "hvc/exact.hpp"
#include "hvc/generate.hpp"
#include "hvc/indicators.hpp"
#include "hvc/metrics.hpp"
#include "hvc/rng.hpp"
#include "support/helpers.hpp"

using namespace hvc;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Vector kDiag{kInvSqrt2, kInvSqrt2};

SolutionSet max_set(std::vector<Vector> pts) {
  return make_solution_set(Orientation::Maximize, std::move(pts));
}

const SolutionSet kThreePoint = max_set({{0.25, 0.75}, {0.5, 0.5}, {0.75, 0.25}});
const ReferencePoint kOrigin2{0, 0};

DirectionSet random_directions(int m, int k, std::uint64_t seed) {
  SplitMix64 gen(seed);
  DirectionSet d;
  d.seed = seed;
  for (int i = 0; i < k; ++i) d.vectors.push_back(testing::random_unit_direction(gen, m));
  return d;
}

}  // namespace

TEST_CASE("segment_length hand cases") {
  SECTION("middle point of the worked three-point set") {
    CHECK_THAT(segment_length(kThreePoint, 1, kOrigin2, kDiag),
               Catch::Matchers::WithinULP(0.25 * std::sqrt(2.0), 4));
  }
  SECTION("dominated solution clamps to zero") {
    const SolutionSet A = max_set({{1, 1}, {0.5, 0.5}});
    CHECK(segment_length(A, 1, kOrigin2, kDiag) == 0.0);
  }
  SECTION("singleton is governed by the boundary term alone") {
    const SolutionSet A = max_set({{1, 1}});
    CHECK_THAT(segment_length(A, 0, kOrigin2, kDiag),
               Catch::Matchers::WithinULP(std::sqrt(2.0), 4));
  }
  SECTION("index out of range") {
    CHECK_THROWS_AS(segment_length(kThreePoint, 3, kOrigin2, kDiag), std::invalid_argument);
  }
}

TEST_CASE("segment_length_via_augmented_points hand cases") {
  CHECK_THAT(segment_length_via_augmented_points(kThreePoint, 1, kOrigin2, kDiag),
             Catch::Matchers::WithinULP(0.25 * std::sqrt(2.0), 4));
  const SolutionSet single = max_set({{1, 1}});
  CHECK_THAT(segment_length_via_augmented_points(single, 0, kOrigin2, kDiag),
             Catch::Matchers::WithinULP(std::sqrt(2.0), 4));
  const SolutionSet dominated = max_set({{1, 1}, {0.5, 0.5}});
  CHECK(segment_length_via_augmented_points(dominated, 1, kOrigin2, kDiag) == 0.0);
}

TEST_CASE("the two segment-length routes agree on random instances") {
  SplitMix64 gen(31);
  for (int t = 0; t < 3000; ++t) {
    const int m = 2 + static_cast<int>(gen.next_unit() * 9);  // 2..10
    const int n = 1 + static_cast<int>(gen.next_unit() * 8);
    ReferencePoint r(m);
    for (int j = 0; j < m; ++j) r[j] = gen.next_unit() * 2 - 1;
    const SolutionSet A = testing::random_set_above(gen, m, n, r);
    const std::size_t s = static_cast<std::size_t>(gen.next_unit() * n);
    const Vector lambda = testing::random_unit_direction(gen, m);
    const double direct = segment_length(A, s, r, lambda);
    const double augmented = segment_length_via_augmented_points(A, s, r, lambda);
    CHECK_THAT(direct, Catch::Matchers::WithinAbs(augmented, 1e-12));
  }
}

TEST_CASE("r2_hvc singleton matches the closed-form integral") {
  // average squared diagonal length over the quarter circle: 4/pi
  const SolutionSet A = max_set({{1, 1}});
  R2HvcParams params;
  params.alpha = 2;
  params.directions = sample_directions(2, 1000000, 20240303);
  const HvcEstimate est = r2_hvc(A, kOrigin2, params);
  CHECK_THAT(est.values[0], Catch::Matchers::WithinAbs(4.0 / std::numbers::pi, 0.01));
  CHECK(est.method == Method::R2Hvc);
  CHECK(est.alpha == 2);
  CHECK(est.budget == 1000000);
}

TEST_CASE("r2_hvc on the worked three-point set") {
  // All three contribution regions are congruent 0.25-side squares with the
  // solution at the best corner, so the three estimates coincide exactly and
  // approach 0.0625 * 4/pi (the exact contributions are 0.0625 each).
  R2HvcParams params;
  params.alpha = 2;
  params.directions = sample_directions(2, 10000, 20240404);
  const HvcEstimate est = r2_hvc(kThreePoint, kOrigin2, params);
  REQUIRE(est.values.size() == 3);
  CHECK(est.values[0] > 0.0);
  CHECK(est.values[1] == est.values[0]);
  CHECK(est.values[2] == est.values[0]);
  CHECK_THAT(est.values[1],
             Catch::Matchers::WithinAbs(0.0625 * 4.0 / std::numbers::pi, 1e-3));
}

TEST_CASE("r2_hvc matches the per-direction segment sum by definition") {
  SplitMix64 gen(32);
  const ReferencePoint r{0, 0, 0};
  const SolutionSet A = testing::random_set_above(gen, 3, 6, r);
  R2HvcParams params;
  params.alpha = 3;
  params.directions = random_directions(3, 50, 33);
  const HvcEstimate est = r2_hvc(A, r, params);
  for (std::size_t s = 0; s < A.size(); ++s) {
    double acc = 0.0;
    for (const Vector& l : params.directions.vectors) {
      acc += pow_int(segment_length(A, s, r, l), 3);
    }
    CHECK(est.values[s] == acc / 50.0);
  }
}

TEST_CASE("r2_hvc assigns exact zeros to dominated and below-reference solutions") {
  R2HvcParams params;
  params.alpha = 2;
  params.directions = random_directions(2, 200, 34);
  SECTION("dominated") {
    const HvcEstimate est = r2_hvc(max_set({{1, 1}, {0.4, 0.9}}), kOrigin2, params);
    CHECK(est.values[1] == 0.0);
    CHECK(est.values[0] > 0.0);
  }
  SECTION("below the reference point") {
    const HvcEstimate est = r2_hvc(max_set({{1, 1}, {2.0, -0.1}}), kOrigin2, params);
    CHECK(est.values[1] == 0.0);
  }
  SECTION("alpha validation") {
    CHECK_THROWS_AS(r2_hvc(max_set({{1, 1}}), kOrigin2,
                           R2HvcParams{3, random_directions(2, 4, 35)}),
                    std::invalid_argument);
  }
}

TEST_CASE("r2_contribution hand cases") {
  SECTION("dominated solution gets zero for every direction set") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const HvcEstimate est = r2_contribution(max_set({{1, 1}, {0.5, 0.5}}), kOrigin2,
                                              random_directions(2, 64, seed));
      CHECK(est.values[1] == 0.0);
      CHECK(est.values[0] > 0.0);
    }
  }
  SECTION("duplicates both get zero") {
    const HvcEstimate est = r2_contribution(max_set({{0.8, 0.8}, {0.8, 0.8}}), kOrigin2,
                                            random_directions(2, 64, 4));
    CHECK(est.values[0] == 0.0);
    CHECK(est.values[1] == 0.0);
  }
  SECTION("all three worked-set values are positive") {
    const HvcEstimate est =
        r2_contribution(kThreePoint, kOrigin2, sample_directions(2, 10000, 20240505));
    for (double v : est.values) CHECK(v > 0.0);
  }
  SECTION("needs two solutions") {
    CHECK_THROWS_AS(r2_contribution(max_set({{1, 1}}), kOrigin2, random_directions(2, 8, 5)),
                    std::invalid_argument);
  }
}

TEST_CASE("r2_contribution equals the leave-one-out indicator difference") {
  SplitMix64 gen(36);
  const ReferencePoint r{0, 0, 0};
  for (int t = 0; t < 20; ++t) {
    const SolutionSet A = testing::random_set_above(gen, 3, 6, r);
    const DirectionSet dirs = random_directions(3, 128, 37 + t);
    const HvcEstimate est = r2_contribution(A, r, dirs);
    const double whole = r2_hv(A, dirs, r);
    for (std::size_t s = 0; s < A.size(); ++s) {
      SolutionSet rest;
      rest.orientation = A.orientation;
      rest.m = A.m;
      for (std::size_t k = 0; k < A.size(); ++k) {
        if (k != s) rest.points.push_back(A.points[k]);
      }
      CHECK_THAT(est.values[s],
                 Catch::Matchers::WithinAbs(whole - r2_hv(rest, dirs, r), 1e-12));
    }
  }
}

TEST_CASE("monte_carlo_hvc hand cases") {
  SECTION("singleton unit box is exact for any sample count") {
    for (std::int64_t n : {1ll, 10ll, 1000ll}) {
      const HvcEstimate est = monte_carlo_hvc(max_set({{1, 1}}), kOrigin2, n, 99);
      CHECK(est.values[0] == 1.0);
    }
  }
  SECTION("weakly dominated solution never hits") {
    const HvcEstimate est = monte_carlo_hvc(max_set({{1, 1}, {0.6, 0.6}}), kOrigin2, 5000, 7);
    CHECK(est.values[1] == 0.0);
  }
  SECTION("below-reference solution yields zero without sampling") {
    const HvcEstimate est = monte_carlo_hvc(max_set({{1, 1}, {0.5, -0.2}}), kOrigin2, 10, 8);
    CHECK(est.values[1] == 0.0);
  }
  SECTION("worked three-point set within the binomial bound") {
    // p = 0.0625 / 0.25, sigma = sqrt(p (1-p) / n) * vol
    const std::int64_t n = 100000;
    const double p = 0.25, vol = 0.25;
    const double three_sigma = 3.0 * std::sqrt(p * (1 - p) / static_cast<double>(n)) * vol;
    const HvcEstimate est = monte_carlo_hvc(kThreePoint, kOrigin2, n, 20240606);
    CHECK_THAT(est.values[1], Catch::Matchers::WithinAbs(0.0625, three_sigma));
  }
  SECTION("deterministic in the seed and independent of evaluation order") {
    const HvcEstimate a = monte_carlo_hvc(kThreePoint, kOrigin2, 2000, 555);
    const HvcEstimate b = monte_carlo_hvc(kThreePoint, kOrigin2, 2000, 555);
    CHECK(a.values == b.values);
  }
}

TEST_CASE("adding a point never increases r2_hvc of existing solutions") {
  SplitMix64 gen(38);
  const ReferencePoint r{0, 0, 0};
  for (int t = 0; t < 30; ++t) {
    const SolutionSet A = testing::random_set_above(gen, 3, 5, r);
    SolutionSet bigger = A;
    bigger.points.push_back(testing::random_point_above(gen, r, Orientation::Maximize));
    R2HvcParams params;
    params.alpha = 3;
    params.directions = random_directions(3, 64, 39 + t);
    const HvcEstimate base = r2_hvc(A, r, params);
    const HvcEstimate grown = r2_hvc(bigger, r, params);
    for (std::size_t s = 0; s < A.size(); ++s) {
      CHECK(grown.values[s] <= base.values[s]);
    }
  }
}

TEST_CASE("translation invariance of all three estimators") {
  SplitMix64 gen(40);
  for (int t = 0; t < 25; ++t) {
    const int m = 2 + static_cast<int>(gen.next_unit() * 2);
    const ReferencePoint r(m, 0.0);
    const SolutionSet A = testing::random_set_above(gen, m, 5, r);
    Vector shift(m);
    for (int j = 0; j < m; ++j) shift[j] = gen.next_unit() * 6 - 3;
    SolutionSet moved = A;
    ReferencePoint moved_r = r;
    for (auto& p : moved.points) {
      for (int j = 0; j < m; ++j) p[j] += shift[j];
    }
    for (int j = 0; j < m; ++j) moved_r[j] += shift[j];

    R2HvcParams params;
    params.alpha = m;
    params.directions = random_directions(m, 64, 41 + t);
    const HvcEstimate h0 = r2_hvc(A, r, params);
    const HvcEstimate h1 = r2_hvc(moved, moved_r, params);
    const HvcEstimate c0 = r2_contribution(A, r, params.directions);
    const HvcEstimate c1 = r2_contribution(moved, moved_r, params.directions);
    const HvcEstimate m0 = monte_carlo_hvc(A, r, 2000, 42);
    const HvcEstimate m1 = monte_carlo_hvc(moved, moved_r, 2000, 42);
    for (std::size_t s = 0; s < A.size(); ++s) {
      const double tol = 1e-9;
      CHECK_THAT(h1.values[s], Catch::Matchers::WithinRel(h0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(h0.values[s], tol));
      CHECK_THAT(c1.values[s], Catch::Matchers::WithinRel(c0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(c0.values[s], tol));
      CHECK_THAT(m1.values[s], Catch::Matchers::WithinRel(m0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(m0.values[s], tol));
    }
  }
}

TEST_CASE("scaling covariance: every method scales by c^m") {
  SplitMix64 gen(43);
  for (int t = 0; t < 25; ++t) {
    const int m = 2 + static_cast<int>(gen.next_unit() * 2);
    const ReferencePoint r(m, 0.0);
    const SolutionSet A = testing::random_set_above(gen, m, 5, r);
    const double c = 0.2 + gen.next_unit() * 4;
    SolutionSet scaled = A;
    for (auto& p : scaled.points) {
      for (int j = 0; j < m; ++j) p[j] *= c;
    }
    const double factor = pow_int(c, m);

    R2HvcParams params;
    params.alpha = m;
    params.directions = random_directions(m, 64, 44 + t);
    const HvcEstimate h0 = r2_hvc(A, r, params);
    const HvcEstimate h1 = r2_hvc(scaled, r, params);
    const HvcEstimate c0 = r2_contribution(A, r, params.directions);
    const HvcEstimate c1 = r2_contribution(scaled, r, params.directions);
    const HvcEstimate m0 = monte_carlo_hvc(A, r, 2000, 45);
    const HvcEstimate m1 = monte_carlo_hvc(scaled, r, 2000, 45);
    const HvcEstimate e0 = hvc_exact(A, r);
    const HvcEstimate e1 = hvc_exact(scaled, r);
    for (std::size_t s = 0; s < A.size(); ++s) {
      const double tol = 1e-9;
      CHECK_THAT(h1.values[s], Catch::Matchers::WithinRel(factor * h0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(factor * h0.values[s], tol));
      CHECK_THAT(c1.values[s], Catch::Matchers::WithinRel(factor * c0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(factor * c0.values[s], tol));
      CHECK_THAT(m1.values[s], Catch::Matchers::WithinRel(factor * m0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(factor * m0.values[s], tol));
      CHECK_THAT(e1.values[s], Catch::Matchers::WithinRel(factor * e0.values[s], tol) ||
                                   Catch::Matchers::WithinAbs(factor * e0.values[s], tol));
    }
  }
}

TEST_CASE("zero law on constructed dominated and duplicate instances") {
  SplitMix64 gen(46);
  const DirectionSet dirs = random_directions(2, 64, 47);
  for (int t = 0; t < 50; ++t) {
    const ReferencePoint r{0, 0};
    SolutionSet A = testing::random_set_above(gen, 2, 4, r);
    // make point 1 weakly dominated by point 0 and point 3 a duplicate of point 2
    A.points[1] = {A.points[0][0] * (0.4 + 0.5 * gen.next_unit()),
                   A.points[0][1] * (0.4 + 0.5 * gen.next_unit())};
    A.points[3] = A.points[2];

    R2HvcParams params;
    params.alpha = 2;
    params.directions = dirs;
    const HvcEstimate h = r2_hvc(A, r, params);
    const HvcEstimate c = r2_contribution(A, r, dirs);
    const HvcEstimate mc = monte_carlo_hvc(A, r, 500, 48 + t);
    const HvcEstimate ex = hvc_exact(A, r);
    CHECK(h.values[1] == 0.0);
    CHECK(c.values[1] == 0.0);
    CHECK(mc.values[1] == 0.0);
    CHECK(ex.values[1] == 0.0);
    for (std::size_t i : {std::size_t{2}, std::size_t{3}}) {
      CHECK(h.values[i] == 0.0);
      CHECK(c.values[i] == 0.0);
      CHECK(mc.values[i] == 0.0);
      CHECK(ex.values[i] == 0.0);
    }
  }
}

TEST_CASE("singleton law: r2_hvc equals r2_hv bit for bit") {
  SplitMix64 gen(49);
  for (int t = 0; t < 100; ++t) {
    const int m = 2 + static_cast<int>(gen.next_unit() * 4);
    const ReferencePoint r(m, -0.25);
    SolutionSet A;
    A.orientation = Orientation::Maximize;
    A.m = m;
    A.points.push_back(testing::random_point_above(gen, r, Orientation::Maximize));
    R2HvcParams params;
    params.alpha = m;
    params.directions = random_directions(m, 32, 50 + t);
    CHECK(r2_hvc(A, r, params).values[0] == r2_hv(A, params.directions, r));
  }
}

TEST_CASE("rank sanity: r2_hvc finds the exact smallest contributor") {
  // With a generous budget on small nondominated sets the argmin of the
  // approximation should almost always match the oracle.
  SplitMix64 gen(51);
  int matches = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const int m = t % 2 == 0 ? 2 : 3;
    const int n = 4 + static_cast<int>(gen.next_unit() * 7);  // 4..10
    const SolutionSet A = testing::random_nondominated_set(gen, m, n);
    const ReferencePoint r(m, 0.0);
    R2HvcParams params;
    params.alpha = m;
    params.directions = sample_directions(m, 10000, derive_seed(52, t));
    const HvcEstimate approx = r2_hvc(A, r, params);
    const HvcEstimate truth = hvc_exact(A, r);
    if (argmin_index(approx.values) == argmin_index(truth.values)) ++matches;
  }
  CHECK(matches >= static_cast<int>(0.95 * trials));
}
