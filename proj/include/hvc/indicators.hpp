// Whole-set R2 indicators. r2_mtch averages ray lengths from the reference
// point to the attainment surface; r2_hv raises each length to the m-th
// power, which is what makes it usable as an (unnormalized) hypervolume
// estimator. Direction sums always run in index order so results are
// bit-reproducible for a fixed direction set.

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hvc/core.hpp"
#include "hvc/scalarize.hpp"

namespace hvc {

namespace detail {

inline void check_indicator_args(const SolutionSet& A, const DirectionSet& dirs,
                                 const Vector& ref, const char* what) {
  if (A.points.empty()) throw std::invalid_argument(std::string(what) + ": empty set");
  if (dirs.vectors.empty()) throw std::invalid_argument(std::string(what) + ": no directions");
  if (static_cast<int>(ref.size()) != A.m ||
      static_cast<int>(dirs.vectors.front().size()) != A.m) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace detail

// (1/|L|) sum_l min_a g_2tch(a | l, r*). Expects a utopian r* (weakly better
// than every point); not used by the contribution methods but kept for
// indicator completeness.
inline double r2_2tch(const SolutionSet& A, const DirectionSet& dirs,
                      const ReferencePoint& r_star) {
  detail::check_indicator_args(A, dirs, r_star, "r2_2tch");
  double acc = 0.0;
  for (const Vector& lambda : dirs.vectors) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vector& a : A.points) {
      const double g = g_2tch(a, lambda, r_star);
      if (g < best) best = g;
    }
    acc += best;
  }
  return acc / static_cast<double>(dirs.size());
}

// (1/|L|) sum_l max_a g_mtch(a | l, r)
inline double r2_mtch(const SolutionSet& A, const DirectionSet& dirs,
                      const ReferencePoint& r) {
  detail::check_indicator_args(A, dirs, r, "r2_mtch");
  double acc = 0.0;
  for (const Vector& lambda : dirs.vectors) {
    double best = 0.0;
    for (const Vector& a : A.points) {
      const double g = g_mtch(a, lambda, r);
      if (g > best) best = g;
    }
    acc += best;
  }
  return acc / static_cast<double>(dirs.size());
}

// (1/|L|) sum_l [max_a g_mtch(a | l, r)]^m
inline double r2_hv(const SolutionSet& A, const DirectionSet& dirs,
                    const ReferencePoint& r) {
  detail::check_indicator_args(A, dirs, r, "r2_hv");
  double acc = 0.0;
  for (const Vector& lambda : dirs.vectors) {
    double best = 0.0;
    for (const Vector& a : A.points) {
      const double g = g_mtch(a, lambda, r);
      if (g > best) best = g;
    }
    acc += pow_int(best, A.m);
  }
  return acc / static_cast<double>(dirs.size());
}

// Largest and second-largest g_mtch per direction with the argmax index.
// Removing solution i changes the per-direction max only where
// best_index == i, in which case `second` applies. This lets the
// traditional contribution run in one pass over the set per direction.
struct DirectionBestTwo {
  double best = 0.0;
  std::size_t best_index = 0;
  double second = 0.0;
};

// Ties broken by lowest index (duplicates give best == second).
inline std::vector<DirectionBestTwo> per_direction_best_two(
    const SolutionSet& A, const DirectionSet& dirs, const ReferencePoint& r) {
  detail::check_indicator_args(A, dirs, r, "per_direction_best_two");
  if (A.size() < 2) {
    throw std::invalid_argument("per_direction_best_two: needs at least 2 solutions");
  }
  std::vector<DirectionBestTwo> table;
  table.reserve(dirs.size());
  for (const Vector& lambda : dirs.vectors) {
    DirectionBestTwo entry;
    entry.best = -1.0;
    entry.second = -1.0;
    for (std::size_t i = 0; i < A.size(); ++i) {
      const double g = g_mtch(A.points[i], lambda, r);
      if (g > entry.best) {
        entry.second = entry.best;
        entry.best = g;
        entry.best_index = i;
      } else if (g > entry.second) {
        entry.second = g;
      }
    }
    if (entry.second < 0.0) entry.second = 0.0;  // unreachable for n >= 2
    table.push_back(entry);
  }
  return table;
}

}  // namespace hvc
