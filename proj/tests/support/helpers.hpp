// Shared generators for property-style tests. Everything is driven by fixed
// seeds so test runs are reproducible.

#pragma once

#include <cstdint>
#include <vector>

#include "hvc/core.hpp"
#include "hvc/rng.hpp"

namespace hvc::testing {

// random point with every coordinate strictly better than ref by at least gap
inline Vector random_point_above(SplitMix64& gen, const ReferencePoint& ref,
                                 Orientation o, double span = 1.0, double gap = 1e-3) {
  Vector p(ref.size());
  for (std::size_t j = 0; j < ref.size(); ++j) {
    const double step = gap + gen.next_unit() * span;
    p[j] = o == Orientation::Maximize ? ref[j] + step : ref[j] - step;
  }
  return p;
}

// a set of n random points strictly better than ref (may contain dominated points)
inline SolutionSet random_set_above(SplitMix64& gen, int m, int n,
                                    const ReferencePoint& ref,
                                    Orientation o = Orientation::Maximize) {
  SolutionSet set;
  set.orientation = o;
  set.m = m;
  for (int i = 0; i < n; ++i) {
    set.points.push_back(random_point_above(gen, ref, o));
  }
  return set;
}

// mutually nondominated set: random points on a simplex-like shell
inline SolutionSet random_nondominated_set(SplitMix64& gen, int m, int n) {
  SolutionSet set;
  set.orientation = Orientation::Maximize;
  set.m = m;
  for (int i = 0; i < n; ++i) {
    Vector w(m);
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      w[j] = 0.05 + gen.next_unit();
      total += w[j];
    }
    for (int j = 0; j < m; ++j) w[j] /= total;
    set.points.push_back(w);
  }
  return set;
}

inline Vector random_unit_direction(SplitMix64& gen, int m) {
  Vector lambda(m);
  double norm2 = 0.0;
  for (int j = 0; j < m; ++j) {
    const double x = gen.next_normal();
    lambda[j] = x < 0 ? -x : x;
    norm2 += lambda[j] * lambda[j];
  }
  const double norm = std::sqrt(norm2);
  for (int j = 0; j < m; ++j) {
    lambda[j] /= norm;
    if (lambda[j] < 1e-12) lambda[j] = 1e-12;
  }
  return lambda;
}

}  // namespace hvc::testing
