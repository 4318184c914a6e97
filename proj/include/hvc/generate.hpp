// Benchmark solution-set generators for the six Pareto-front shapes,
// direction-vector sampling on the unit hypersphere, and reference points.
//
// Front sampling draws weights uniformly on the unit simplex (normalized
// exponential spacings) and pushes them through the shape map. Note this is
// uniform in weight space, not in surface area on the curved fronts; the
// accuracy metrics compare methods on identical sets, so the sampling
// measure affects all methods equally.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hvc/core.hpp"
#include "hvc/rng.hpp"

namespace hvc {

inline constexpr double kDirectionEpsilon = 1e-12;

enum class PfShape {
  LinearTriangular,
  ConcaveTriangular,
  ConvexTriangular,
  LinearInverted,
  ConcaveInverted,
  ConvexInverted,
};

inline constexpr PfShape kAllShapes[] = {
    PfShape::LinearTriangular, PfShape::ConcaveTriangular, PfShape::ConvexTriangular,
    PfShape::LinearInverted,   PfShape::ConcaveInverted,   PfShape::ConvexInverted,
};

inline const char* to_string(PfShape s) {
  switch (s) {
    case PfShape::LinearTriangular: return "linear_triangular";
    case PfShape::ConcaveTriangular: return "concave_triangular";
    case PfShape::ConvexTriangular: return "convex_triangular";
    case PfShape::LinearInverted: return "linear_inverted";
    case PfShape::ConcaveInverted: return "concave_inverted";
    case PfShape::ConvexInverted: return "convex_inverted";
  }
  return "?";
}

inline PfShape pf_shape_from_string(const std::string& s) {
  for (PfShape shape : kAllShapes) {
    if (s == to_string(shape)) return shape;
  }
  throw std::invalid_argument("unknown PF shape: " + s);
}

inline bool is_inverted(PfShape s) {
  return s == PfShape::LinearInverted || s == PfShape::ConcaveInverted ||
         s == PfShape::ConvexInverted;
}

inline bool is_triangular(PfShape s) { return !is_inverted(s); }

// Map a simplex weight vector onto the front surface:
//   linear   f = w          (sum f_j = 1)
//   concave  f = w / |w|_2  (sum f_j^2 = 1)
//   convex   f_j = w_j^2    (sum sqrt(f_j) = 1)
// followed by f_j <- 1 - f_j for the inverted variants.
inline Vector point_from_weights(PfShape shape, const Vector& w) {
  detail::check_vector(w, "point_from_weights");
  const std::size_t m = w.size();
  Vector f(m);
  switch (shape) {
    case PfShape::LinearTriangular:
    case PfShape::LinearInverted:
      f = w;
      break;
    case PfShape::ConcaveTriangular:
    case PfShape::ConcaveInverted: {
      double norm2 = 0.0;
      for (double x : w) norm2 += x * x;
      const double norm = std::sqrt(norm2);
      for (std::size_t j = 0; j < m; ++j) f[j] = w[j] / norm;
      break;
    }
    case PfShape::ConvexTriangular:
    case PfShape::ConvexInverted:
      for (std::size_t j = 0; j < m; ++j) f[j] = w[j] * w[j];
      break;
  }
  if (is_inverted(shape)) {
    for (std::size_t j = 0; j < m; ++j) f[j] = 1.0 - f[j];
  }
  return f;
}

// n points on the given front, orientation Maximize, deterministic in seed.
inline SolutionSet sample_front(PfShape shape, int m, int n, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("sample_front: need m >= 2");
  if (n < 1) throw std::invalid_argument("sample_front: need n >= 1");
  SplitMix64 gen(seed);
  SolutionSet set;
  set.orientation = Orientation::Maximize;
  set.m = m;
  set.points.reserve(static_cast<std::size_t>(n));
  Vector w(static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      w[j] = -std::log1p(-gen.next_unit());  // Exp(1) spacing
      total += w[j];
    }
    if (total <= 0.0) {
      for (int j = 0; j < m; ++j) w[j] = 1.0;  // all-zero draw, probability ~0
      total = static_cast<double>(m);
    }
    for (int j = 0; j < m; ++j) w[j] /= total;
    set.points.push_back(point_from_weights(shape, w));
  }
  return set;
}

// k direction vectors: componentwise |N(0,1)| normalized to unit 2-norm,
// components then clamped to kDirectionEpsilon so scalarizers never divide
// by zero (the clamp moves the norm by well under 1e-12).
inline DirectionSet sample_directions(int m, int k, std::uint64_t seed) {
  if (m < 2) throw std::invalid_argument("sample_directions: need m >= 2");
  if (k < 1) throw std::invalid_argument("sample_directions: need k >= 1");
  SplitMix64 gen(seed);
  DirectionSet dirs;
  dirs.seed = seed;
  dirs.vectors.reserve(static_cast<std::size_t>(k));
  Vector lambda(static_cast<std::size_t>(m));
  for (int i = 0; i < k; ++i) {
    double norm2 = 0.0;
    for (int j = 0; j < m; ++j) {
      lambda[j] = std::fabs(gen.next_normal());
      norm2 += lambda[j] * lambda[j];
    }
    if (norm2 <= 0.0) {
      for (int j = 0; j < m; ++j) lambda[j] = 1.0;  // probability ~0
      norm2 = static_cast<double>(m);
    }
    const double norm = std::sqrt(norm2);
    for (int j = 0; j < m; ++j) {
      lambda[j] /= norm;
      if (lambda[j] < kDirectionEpsilon) lambda[j] = kDirectionEpsilon;
    }
    dirs.vectors.push_back(lambda);
  }
  return dirs;
}

// (r, r, ..., r); with r = 0 this is the nadir point of all triangular fronts
inline ReferencePoint reference_point(int m, double r_scalar) {
  if (m < 1) throw std::invalid_argument("reference_point: need m >= 1");
  return ReferencePoint(static_cast<std::size_t>(m), r_scalar);
}

// n_sets independent sets; set i uses substream i of the suite seed
inline std::vector<SolutionSet> make_benchmark_suite(PfShape shape, int m, int n,
                                                     int n_sets, std::uint64_t seed) {
  if (n_sets < 1) throw std::invalid_argument("make_benchmark_suite: need n_sets >= 1");
  std::vector<SolutionSet> suite;
  suite.reserve(static_cast<std::size_t>(n_sets));
  for (int i = 0; i < n_sets; ++i) {
    suite.push_back(sample_front(shape, m, n, derive_seed(seed, static_cast<std::uint64_t>(i))));
  }
  return suite;
}

}  // namespace hvc
