// The three hypervolume-contribution approximation methods.
//
// r2_hvc is the direct estimator: for every solution it averages (powered)
// lengths of rays that start at the solution and stop at whichever comes
// first, the attainment surface of the other solutions or the box boundary
// at the reference point. r2_contribution is the traditional leave-one-out
// difference of the whole-set R2^HV indicator. monte_carlo_hvc samples each
// solution's box and counts points no other solution covers.
//
// Conventions shared by all three:
//  - a solution dominated by (or equal to) another member gets exactly 0;
//  - a solution not strictly better than the reference point in every
//    objective has an empty box and gets exactly 0;
//  - negative ray lengths clamp to 0 before exponentiation (an even alpha
//    would otherwise turn dominated solutions into positive contributors).

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hvc/core.hpp"
#include "hvc/indicators.hpp"
#include "hvc/rng.hpp"
#include "hvc/scalarize.hpp"

namespace hvc {

// alpha is 1 (average length) or m (average m-powered length)
struct R2HvcParams {
  int alpha = 0;
  DirectionSet directions;
};

// Ray length from A.points[s_index] to the boundary of its contribution
// region along lambda: min over the other solutions' attainment surfaces and
// the reference-box boundary, clamped at 0. An empty remainder leaves only
// the boundary term.
inline double segment_length(const SolutionSet& A, std::size_t s_index,
                             const ReferencePoint& r, const Vector& lambda) {
  if (s_index >= A.size()) {
    throw std::invalid_argument("segment_length: solution index not in set");
  }
  const Vector& s = A.points[s_index];
  double len = g_mtch(r, lambda, s);
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (k == s_index) continue;
    const double g = g_star_2tch(A.points[k], lambda, s, A.orientation);
    if (g < len) len = g;
    if (len <= 0.0) return 0.0;
  }
  return len;
}

// Same quantity computed the alternative way: m auxiliary points (copies of
// s with one coordinate replaced by the reference value) stand in for the
// boundary term. Must equal segment_length on any set whose solutions are
// strictly better than r.
inline double segment_length_via_augmented_points(const SolutionSet& A,
                                                  std::size_t s_index,
                                                  const ReferencePoint& r,
                                                  const Vector& lambda) {
  if (s_index >= A.size()) {
    throw std::invalid_argument("segment_length_via_augmented_points: solution index not in set");
  }
  const Vector& s = A.points[s_index];
  detail::check_same_dim(s, r, "segment_length_via_augmented_points");
  double len = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (k == s_index) continue;
    const double g = g_star_2tch(A.points[k], lambda, s, A.orientation);
    if (g < len) len = g;
  }
  Vector aux = s;
  for (std::size_t j = 0; j < s.size(); ++j) {
    aux[j] = r[j];
    const double g = g_star_2tch(aux, lambda, s, A.orientation);
    if (g < len) len = g;
    aux[j] = s[j];
  }
  return len > 0.0 ? len : 0.0;
}

// value[s] = (1/|L|) sum_l segment_length(s, A, r, l)^alpha
inline HvcEstimate r2_hvc(const SolutionSet& A, const ReferencePoint& r,
                          const R2HvcParams& params) {
  detail::check_indicator_args(A, params.directions, r, "r2_hvc");
  if (params.alpha != 1 && params.alpha != A.m) {
    throw std::invalid_argument("r2_hvc: alpha must be 1 or m");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = A.size();
  std::vector<char> eligible(n);
  for (std::size_t i = 0; i < n; ++i) {
    eligible[i] = strictly_better(A.points[i], r, A.orientation) ? 1 : 0;
  }
  std::vector<double> sums(n, 0.0);
  for (const Vector& lambda : params.directions.vectors) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!eligible[s]) continue;
      const double len = segment_length(A, s, r, lambda);
      sums[s] += pow_int(len, params.alpha);
    }
  }
  HvcEstimate est;
  est.method = Method::R2Hvc;
  est.budget = static_cast<std::int64_t>(params.directions.size());
  est.alpha = params.alpha;
  est.values.resize(n);
  const double count = static_cast<double>(params.directions.size());
  for (std::size_t s = 0; s < n; ++s) {
    est.values[s] = eligible[s] ? sums[s] / count : 0.0;
  }
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return est;
}

namespace detail {

// contribution of each member of `A` to r2_hv(A), one best-two pass
inline void accumulate_r2_differences(const SolutionSet& A, const DirectionSet& dirs,
                                      const ReferencePoint& r,
                                      const std::vector<std::size_t>& to_original,
                                      std::vector<double>& sums) {
  const std::vector<DirectionBestTwo> table = per_direction_best_two(A, dirs, r);
  for (const DirectionBestTwo& e : table) {
    sums[to_original[e.best_index]] += pow_int(e.best, A.m) - pow_int(e.second, A.m);
  }
}

}  // namespace detail

// Traditional method: value[s] = r2_hv(A) - r2_hv(A \ {s}), evaluated via
// the best-two table so each direction charges best^m - second^m to its
// argmax. Solutions with an empty box are excluded from the competition and
// get 0, matching the exact method's view of such points.
inline HvcEstimate r2_contribution(const SolutionSet& A, const ReferencePoint& r,
                                   const DirectionSet& dirs) {
  detail::check_indicator_args(A, dirs, r, "r2_contribution");
  if (A.size() < 2) {
    throw std::invalid_argument("r2_contribution: needs at least 2 solutions");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = A.size();
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < n; ++i) {
    if (strictly_better(A.points[i], r, A.orientation)) eligible.push_back(i);
  }
  std::vector<double> sums(n, 0.0);
  if (eligible.size() == n) {
    std::vector<std::size_t> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i;
    detail::accumulate_r2_differences(A, dirs, r, identity, sums);
  } else if (eligible.size() >= 2) {
    SolutionSet sub;
    sub.orientation = A.orientation;
    sub.m = A.m;
    for (std::size_t i : eligible) sub.points.push_back(A.points[i]);
    detail::accumulate_r2_differences(sub, dirs, r, eligible, sums);
  } else if (eligible.size() == 1) {
    // the lone survivor owns the whole indicator value
    const Vector& s = A.points[eligible.front()];
    for (const Vector& lambda : dirs.vectors) {
      sums[eligible.front()] += pow_int(g_mtch(s, lambda, r), A.m);
    }
  }
  HvcEstimate est;
  est.method = Method::R2Contribution;
  est.budget = static_cast<std::int64_t>(dirs.size());
  est.values.resize(n);
  const double count = static_cast<double>(dirs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double v = sums[i] / count;
    est.values[i] = v > 0.0 ? v : 0.0;
  }
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return est;
}

// Per-solution box sampling: uniform points in the box spanned by r and s,
// a hit is a sample no other solution weakly dominates, and the value is
// hit rate times box volume. Deterministic given the seed; each solution
// draws from its own substream so results do not depend on evaluation order.
inline HvcEstimate monte_carlo_hvc(const SolutionSet& A, const ReferencePoint& r,
                                   std::int64_t n_samples, std::uint64_t seed) {
  if (A.points.empty()) throw std::invalid_argument("monte_carlo_hvc: empty set");
  if (static_cast<int>(r.size()) != A.m) {
    throw std::invalid_argument("monte_carlo_hvc: dimension mismatch");
  }
  if (n_samples < 1) throw std::invalid_argument("monte_carlo_hvc: need n_samples >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = A.size();
  const std::size_t m = static_cast<std::size_t>(A.m);
  HvcEstimate est;
  est.method = Method::MonteCarlo;
  est.budget = n_samples;
  est.values.assign(n, 0.0);
  Vector x(m);
  for (std::size_t s = 0; s < n; ++s) {
    const Vector& p = A.points[s];
    if (!strictly_better(p, r, A.orientation)) continue;  // empty box
    double volume = 1.0;
    for (std::size_t j = 0; j < m; ++j) volume *= std::fabs(p[j] - r[j]);
    SplitMix64 gen(derive_seed(seed, s));
    std::int64_t hits = 0;
    for (std::int64_t t = 0; t < n_samples; ++t) {
      for (std::size_t j = 0; j < m; ++j) x[j] = gen.next_in(r[j], p[j]);
      bool covered = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != s && weakly_dominates(A.points[k], x, A.orientation)) {
          covered = true;
          break;
        }
      }
      if (!covered) ++hits;
    }
    est.values[s] =
        (static_cast<double>(hits) / static_cast<double>(n_samples)) * volume;
  }
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return est;
}

}  // namespace hvc
