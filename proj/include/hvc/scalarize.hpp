// The scalarizing functions behind every indicator in the library. Each one
// measures a ray length: g_2tch from the utopian point to the attainment
// surface, g_mtch from a point to the box boundary, g_star_2tch from a
// solution to another solution's attainment surface (signed, no absolute
// value, so callers can detect domination and clamp).
//
// All of them assume lambda_j > 0; direction generation clamps components
// to kDirectionEpsilon, so no per-call guard is needed.

#pragma once

#include <cmath>
#include <limits>

#include "hvc/core.hpp"

namespace hvc {

// x^e by repeated multiplication; every module uses this one routine so that
// identical inputs give bit-identical powers.
inline double pow_int(double x, int e) {
  double y = 1.0;
  for (int i = 0; i < e; ++i) y *= x;
  return y;
}

// max_j |r*_j - a_j| / lambda_j
inline double g_2tch(const Vector& a, const Vector& lambda, const ReferencePoint& r_star) {
  detail::check_same_dim(a, lambda, "g_2tch");
  detail::check_same_dim(a, r_star, "g_2tch");
  double best = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double t = std::fabs(r_star[j] - a[j]) / lambda[j];
    if (t > best) best = t;
  }
  return best;
}

// min_j |origin_j - p_j| / lambda_j. Serves both the whole-set indicator
// (origin = reference point) and the contribution boundary term (origin = a
// solution, p = the reference point); same formula either way.
inline double g_mtch(const Vector& p, const Vector& lambda, const Vector& origin) {
  detail::check_same_dim(p, lambda, "g_mtch");
  detail::check_same_dim(p, origin, "g_mtch");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double t = std::fabs(origin[j] - p[j]) / lambda[j];
    if (t < best) best = t;
  }
  return best;
}

// Signed ray length from s to a's attainment surface:
//   Maximize: max_j (s_j - a_j) / lambda_j
//   Minimize: max_j (a_j - s_j) / lambda_j
// Negative when a weakly dominates s; callers clamp, not this function.
inline double g_star_2tch(const Vector& a, const Vector& lambda, const Vector& s,
                          Orientation o) {
  detail::check_same_dim(a, lambda, "g_star_2tch");
  detail::check_same_dim(a, s, "g_star_2tch");
  double best = -std::numeric_limits<double>::infinity();
  if (o == Orientation::Maximize) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double t = (s[j] - a[j]) / lambda[j];
      if (t > best) best = t;
    }
  } else {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double t = (a[j] - s[j]) / lambda[j];
      if (t > best) best = t;
    }
  }
  return best;
}

}  // namespace hvc
