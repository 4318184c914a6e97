// Domain types shared by every module: objective vectors, solution sets,
// direction sets, contribution estimates, and the dominance relations.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hvc {

enum class Orientation { Maximize, Minimize };

// A point in m-dimensional objective space. Valid points have m >= 2 finite
// components; construction helpers below enforce this.
using Vector = std::vector<double>;

// Same layout as a point; bounds the hypervolume region (or acts as the
// utopian point for the 2-Tch indicator).
using ReferencePoint = Vector;

enum class Method { R2Hvc, R2Contribution, MonteCarlo, Exact };

inline const char* to_string(Orientation o) {
  return o == Orientation::Maximize ? "maximize" : "minimize";
}

inline Orientation orientation_from_string(const std::string& s) {
  if (s == "maximize") return Orientation::Maximize;
  if (s == "minimize") return Orientation::Minimize;
  throw std::invalid_argument("unknown orientation: " + s);
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::R2Hvc: return "r2hvc";
    case Method::R2Contribution: return "r2contrib";
    case Method::MonteCarlo: return "montecarlo";
    case Method::Exact: return "exact";
  }
  return "?";
}

inline Method method_from_string(const std::string& s) {
  if (s == "r2hvc") return Method::R2Hvc;
  if (s == "r2contrib") return Method::R2Contribution;
  if (s == "montecarlo") return Method::MonteCarlo;
  if (s == "exact") return Method::Exact;
  throw std::invalid_argument("unknown method: " + s);
}

namespace detail {

inline void check_vector(const Vector& v, const char* what) {
  if (v.size() < 2) {
    throw std::invalid_argument(std::string(what) + ": needs at least 2 objectives");
  }
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(what) + ": non-finite component");
    }
  }
}

inline void check_same_dim(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace detail

// Ordered collection of objective vectors sharing one orientation. Point
// order is stable: the index identifies a solution across all methods.
struct SolutionSet {
  Orientation orientation = Orientation::Maximize;
  std::vector<Vector> points;
  int m = 0;

  std::size_t size() const { return points.size(); }
};

inline SolutionSet make_solution_set(Orientation o, std::vector<Vector> points) {
  if (points.empty()) throw std::invalid_argument("solution set: no points");
  detail::check_vector(points.front(), "solution set");
  const std::size_t m = points.front().size();
  for (const Vector& p : points) {
    detail::check_vector(p, "solution set");
    if (p.size() != m) throw std::invalid_argument("solution set: mixed dimensions");
  }
  return SolutionSet{o, std::move(points), static_cast<int>(m)};
}

// Unit-norm nonnegative direction vectors, tagged with the seed that
// produced them.
struct DirectionSet {
  std::vector<Vector> vectors;
  std::uint64_t seed = 0;

  std::size_t size() const { return vectors.size(); }
};

// Per-solution contribution values plus method metadata. `budget` is the
// direction-vector or sample count (0 for the exact method); `alpha` is
// meaningful for the R2Hvc method only (0 otherwise).
struct HvcEstimate {
  Method method = Method::Exact;
  std::vector<double> values;
  std::int64_t budget = 0;
  double wall_time_s = 0.0;
  int alpha = 0;
};

inline void check_estimate(const HvcEstimate& e, std::size_t set_size) {
  if (e.values.size() != set_size) {
    throw std::logic_error("estimate: values/set size mismatch");
  }
  for (double v : e.values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::logic_error("estimate: non-finite or negative value");
    }
  }
}

// true iff a is at least as good as b everywhere and strictly better somewhere
inline bool dominates(const Vector& a, const Vector& b, Orientation o) {
  detail::check_same_dim(a, b, "dominates");
  bool strict = false;
  if (o == Orientation::Maximize) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] < b[j]) return false;
      if (a[j] > b[j]) strict = true;
    }
  } else {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] > b[j]) return false;
      if (a[j] < b[j]) strict = true;
    }
  }
  return strict;
}

// a >= b in every objective (equality allowed everywhere)
inline bool weakly_dominates(const Vector& a, const Vector& b, Orientation o) {
  detail::check_same_dim(a, b, "weakly_dominates");
  if (o == Orientation::Maximize) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] < b[j]) return false;
    }
  } else {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] > b[j]) return false;
    }
  }
  return true;
}

// a strictly better than r in every objective; a solution failing this has
// an empty hypervolume box and contributes exactly zero everywhere.
inline bool strictly_better(const Vector& a, const ReferencePoint& r, Orientation o) {
  detail::check_same_dim(a, r, "strictly_better");
  if (o == Orientation::Maximize) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] <= r[j]) return false;
    }
  } else {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] >= r[j]) return false;
    }
  }
  return true;
}

struct SetDiagnostics {
  // solutions not strictly better than the reference point in all objectives
  std::vector<std::size_t> not_better_than_reference;
  // exact duplicate pairs (i, j) with i < j
  std::vector<std::pair<std::size_t, std::size_t>> duplicate_pairs;
  // solutions strictly dominated by another member
  std::vector<std::size_t> dominated;

  bool clean() const {
    return not_better_than_reference.empty() && duplicate_pairs.empty() &&
           dominated.empty();
  }
};

// Diagnostic scan; never mutates A. Flagged solutions stay in the set and
// every contribution method assigns them zero rather than erroring.
inline SetDiagnostics validate_set(const SolutionSet& A, const ReferencePoint& r) {
  if (static_cast<int>(r.size()) != A.m) {
    throw std::invalid_argument("validate_set: reference dimension mismatch");
  }
  SetDiagnostics d;
  const std::size_t n = A.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!strictly_better(A.points[i], r, A.orientation)) {
      d.not_better_than_reference.push_back(i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (A.points[i] == A.points[j]) d.duplicate_pairs.emplace_back(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && dominates(A.points[k], A.points[i], A.orientation)) {
        d.dominated.push_back(i);
        break;
      }
    }
  }
  return d;
}

}  // namespace hvc
