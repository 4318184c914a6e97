// Ground-truth hypervolume and contribution computation for low dimension.
// This is the oracle for every accuracy metric, not a production HV code.
//
// hv_exact works in delta space (componentwise gain of each solution over
// the reference point, orientation folded in), where the hypervolume is the
// measure of a union of boxes [0, d] in the positive orthant. The measure
// is computed by a recursive exclusive-volume scheme: points are put in a
// canonical order, and each point contributes its own box volume minus the
// volume of the later points clipped into its box. Clipped sets are pruned
// to their maxima at every step, which keeps the recursion tractable at the
// documented guards (m <= 8, and N <= 100 around m <= 6).
//
// hv_inclusion_exclusion is the independent oracle: a literal signed sum of
// meet-box volumes over all nonempty subsets. The two routines share no
// code beyond the delta transform.

#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hvc/core.hpp"

namespace hvc {

inline constexpr int kMaxExactDimension = 8;
inline constexpr int kMaxInclusionExclusionPoints = 20;

namespace detail {

// row-major point storage for the exclusive-volume recursion
struct Rows {
  std::vector<double> data;
  std::size_t m = 0;

  std::size_t size() const { return m == 0 ? 0 : data.size() / m; }
  const double* row(std::size_t i) const { return data.data() + i * m; }
  double* row(std::size_t i) { return data.data() + i * m; }
};

inline bool row_weakly_dominates(const double* b, const double* a, std::size_t m) {
  for (std::size_t j = 0; j < m; ++j) {
    if (b[j] < a[j]) return false;
  }
  return true;
}

// Keep maximal rows only, first of exact duplicates wins, order preserved.
inline void pareto_prune(Rows& r) {
  const std::size_t n = r.size();
  if (n < 2) return;
  const std::size_t m = r.m;
  std::vector<char> dead(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (dead[i]) continue;
    const double* ri = r.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || dead[k]) continue;
      const double* rk = r.row(k);
      if (row_weakly_dominates(ri, rk, m)) {
        if (!row_weakly_dominates(rk, ri, m) || k > i) dead[k] = 1;
      }
    }
  }
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (dead[i]) continue;
    if (w != i) std::copy(r.row(i), r.row(i) + m, r.row(w));
    ++w;
  }
  r.data.resize(w * m);
}

inline double row_volume(const double* d, std::size_t m) {
  double v = 1.0;
  for (std::size_t j = 0; j < m; ++j) v *= d[j];
  return v;
}

// staircase area of a maximal 2-D set
inline double union_area_2d(const Rows& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.row(a)[0] > r.row(b)[0];
  });
  // x descending implies y strictly ascending for maximal points
  double area = r.row(order[0])[0] * r.row(order[0])[1];
  double prev_y = r.row(order[0])[1];
  for (std::size_t i = 1; i < n; ++i) {
    area += r.row(order[i])[0] * (r.row(order[i])[1] - prev_y);
    prev_y = r.row(order[i])[1];
  }
  return area;
}

// measure of the union of boxes [0, row] for a maximal row set
inline double union_volume(Rows rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 0.0;
  const std::size_t m = rows.m;
  if (n == 1) return row_volume(rows.row(0), m);
  if (m == 2) return union_area_2d(rows);

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* pi = rows.row(i);
    Rows clipped;
    clipped.m = m;
    clipped.data.reserve((n - i - 1) * m);
    for (std::size_t k = i + 1; k < n; ++k) {
      const double* pk = rows.row(k);
      for (std::size_t j = 0; j < m; ++j) {
        clipped.data.push_back(pk[j] < pi[j] ? pk[j] : pi[j]);
      }
    }
    pareto_prune(clipped);
    total += row_volume(pi, m) - union_volume(std::move(clipped));
  }
  return total;
}

// Canonical processing order: last coordinate descending (so clipping never
// changes it), full-row lexicographic tiebreak. The total order makes the
// result independent of input permutation, bit for bit.
inline void canonical_sort(Rows& r) {
  const std::size_t n = r.size();
  const std::size_t m = r.m;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double* ra = r.row(a);
    const double* rb = r.row(b);
    if (ra[m - 1] != rb[m - 1]) return ra[m - 1] > rb[m - 1];
    return std::lexicographical_compare(ra, ra + m, rb, rb + m);
  });
  Rows sorted;
  sorted.m = m;
  sorted.data.reserve(n * m);
  for (std::size_t i : order) {
    sorted.data.insert(sorted.data.end(), r.row(i), r.row(i) + m);
  }
  r = std::move(sorted);
}

// Deltas of the points strictly better than r; everything else is dropped
// (its box is empty, so it adds nothing to the union).
inline Rows delta_rows(const SolutionSet& A, const ReferencePoint& r) {
  Rows rows;
  rows.m = static_cast<std::size_t>(A.m);
  for (const Vector& p : A.points) {
    bool keep = true;
    for (int j = 0; j < A.m; ++j) {
      const double d = A.orientation == Orientation::Maximize ? p[j] - r[j] : r[j] - p[j];
      if (d <= 0.0) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    for (int j = 0; j < A.m; ++j) {
      rows.data.push_back(A.orientation == Orientation::Maximize ? p[j] - r[j]
                                                                 : r[j] - p[j]);
    }
  }
  return rows;
}

inline void check_exact_args(const SolutionSet& A, const ReferencePoint& r,
                             const char* what) {
  if (static_cast<int>(r.size()) != A.m) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
  if (A.m > kMaxExactDimension) {
    throw std::invalid_argument(std::string(what) + ": dimension above the exact guard (" +
                                std::to_string(kMaxExactDimension) +
                                "); use the R2 or Monte Carlo approximations");
  }
}

}  // namespace detail

// Exact Lebesgue measure of the region dominated by A and bounded by r.
inline double hv_exact(const SolutionSet& A, const ReferencePoint& r) {
  detail::check_exact_args(A, r, "hv_exact");
  detail::Rows rows = detail::delta_rows(A, r);
  if (rows.size() == 0) return 0.0;
  detail::pareto_prune(rows);
  detail::canonical_sort(rows);
  return detail::union_volume(std::move(rows));
}

// Independent oracle: signed sum over all nonempty subsets of the volume of
// the subset's meet box, negative side lengths clamped to zero.
inline double hv_inclusion_exclusion(const SolutionSet& A, const ReferencePoint& r) {
  if (static_cast<int>(r.size()) != A.m) {
    throw std::invalid_argument("hv_inclusion_exclusion: dimension mismatch");
  }
  const std::size_t n = A.size();
  if (n > static_cast<std::size_t>(kMaxInclusionExclusionPoints)) {
    throw std::invalid_argument("hv_inclusion_exclusion: too many points");
  }
  const std::size_t m = static_cast<std::size_t>(A.m);
  std::vector<double> delta(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      delta[i * m + j] = A.orientation == Orientation::Maximize
                             ? A.points[i][j] - r[j]
                             : r[j] - A.points[i][j];
    }
  }
  double total = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    double vol = 1.0;
    for (std::size_t j = 0; j < m && vol != 0.0; ++j) {
      double meet = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) meet = std::min(meet, delta[i * m + j]);
      }
      vol *= meet > 0.0 ? meet : 0.0;
    }
    total += (std::popcount(mask) & 1u) ? vol : -vol;
  }
  return total;
}

// value[s] = hv_exact(A) - hv_exact(A \ {s}); HV of an empty remainder is 0.
inline HvcEstimate hvc_exact(const SolutionSet& A, const ReferencePoint& r) {
  detail::check_exact_args(A, r, "hvc_exact");
  const auto t0 = std::chrono::steady_clock::now();
  const double whole = hv_exact(A, r);
  HvcEstimate est;
  est.method = Method::Exact;
  est.budget = 0;
  est.values.resize(A.size());
  for (std::size_t s = 0; s < A.size(); ++s) {
    SolutionSet rest;
    rest.orientation = A.orientation;
    rest.m = A.m;
    rest.points.reserve(A.size() - 1);
    for (std::size_t k = 0; k < A.size(); ++k) {
      if (k != s) rest.points.push_back(A.points[k]);
    }
    const double remainder = rest.points.empty() ? 0.0 : hv_exact(rest, r);
    const double c = whole - remainder;
    est.values[s] = c > 0.0 ? c : 0.0;
  }
  est.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return est;
}

// argmin of the exact contributions, ties broken by lowest index
inline std::size_t smallest_contributor(const SolutionSet& A, const ReferencePoint& r) {
  const HvcEstimate est = hvc_exact(A, r);
  std::size_t best = 0;
  for (std::size_t i = 1; i < est.values.size(); ++i) {
    if (est.values[i] < est.values[best]) best = i;
  }
  return best;
}

}  // namespace hvc
