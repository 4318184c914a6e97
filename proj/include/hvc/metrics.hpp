// Accuracy metrics: pairwise order consistency against the exact
// contributions, and correct identification of the smallest contributor.
// Both are rank statistics, invariant under strictly increasing transforms
// of the approximate values.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hvc/core.hpp"

namespace hvc {

// Differences within tie_tolerance count as ties; a tie in one ranking is
// consistent only with a tie in the other. The tolerance matters for
// dominated solutions, where every method returns exactly 0.
inline double consistency_rate(const HvcEstimate& truth, const HvcEstimate& approx,
                               double tie_tolerance = 1e-12) {
  if (truth.method != Method::Exact) {
    throw std::invalid_argument("consistency_rate: truth must come from the exact method");
  }
  if (truth.values.size() != approx.values.size()) {
    throw std::invalid_argument("consistency_rate: length mismatch");
  }
  const std::size_t n = truth.values.size();
  if (n < 2) throw std::invalid_argument("consistency_rate: need at least 2 solutions");
  const auto sign_of = [tie_tolerance](double d) {
    if (d > tie_tolerance) return 1;
    if (d < -tie_tolerance) return -1;
    return 0;
  };
  std::size_t consistent = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int st = sign_of(truth.values[i] - truth.values[j]);
      const int sa = sign_of(approx.values[i] - approx.values[j]);
      if (st == sa) ++consistent;
    }
  }
  return static_cast<double>(consistent) / (static_cast<double>(n) * (n - 1) / 2.0);
}

// lowest index wins ties
inline std::size_t argmin_index(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("argmin_index: empty");
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[best]) best = i;
  }
  return best;
}

inline bool correct_identification(const HvcEstimate& truth, const HvcEstimate& approx) {
  if (truth.method != Method::Exact) {
    throw std::invalid_argument("correct_identification: truth must come from the exact method");
  }
  if (truth.values.size() != approx.values.size()) {
    throw std::invalid_argument("correct_identification: length mismatch");
  }
  if (truth.values.size() < 2) {
    throw std::invalid_argument("correct_identification: need at least 2 solutions");
  }
  return argmin_index(truth.values) == argmin_index(approx.values);
}

// fraction of solution sets whose smallest contributor was identified
inline double identification_rate(
    const std::vector<std::pair<HvcEstimate, HvcEstimate>>& results) {
  if (results.empty()) throw std::invalid_argument("identification_rate: no results");
  std::size_t correct = 0;
  for (const auto& [truth, approx] : results) {
    if (correct_identification(truth, approx)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(results.size());
}

struct RunAggregate {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1) convention; 0 for a single run
  int n_runs = 0;
};

inline RunAggregate aggregate_runs(const std::vector<double>& per_run, int n_runs) {
  if (n_runs < 1 || per_run.size() != static_cast<std::size_t>(n_runs)) {
    throw std::invalid_argument("aggregate_runs: length must equal n_runs >= 1");
  }
  RunAggregate agg;
  agg.n_runs = n_runs;
  for (double v : per_run) agg.mean += v;
  agg.mean /= n_runs;
  if (n_runs > 1) {
    double ss = 0.0;
    for (double v : per_run) ss += (v - agg.mean) * (v - agg.mean);
    agg.stddev = std::sqrt(ss / (n_runs - 1));
  }
  return agg;
}

}  // namespace hvc
