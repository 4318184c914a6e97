// Reproducible experiment pipeline behind the CLI: generate benchmark
// suites, run the contribution methods over a (shape, m, N, r) grid, score
// them against the exact oracle, benchmark runtimes, and emit report tables.
//
// Everything is keyed off one root seed. Suite, direction-vector and Monte
// Carlo substreams are derived from the grid coordinates rather than loop
// positions, so a given cell reproduces even if the surrounding config
// changes. Two executions with the same config are byte-identical in every
// output except wall-clock columns.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hvc/contribution.hpp"
#include "hvc/core.hpp"
#include "hvc/exact.hpp"
#include "hvc/generate.hpp"
#include "hvc/io.hpp"
#include "hvc/metrics.hpp"
#include "hvc/rng.hpp"

namespace hvc {

// exit codes surfaced by the CLI: 2 IO, 3 missing sets, 4 exact dimension
// guard, 5 missing inputs for eval/report
struct PipelineError : std::runtime_error {
  int exit_code;
  PipelineError(int code, const std::string& msg)
      : std::runtime_error(msg), exit_code(code) {}
};

struct MethodSpec {
  Method method = Method::Exact;
  int budget = 0;        // |Lambda| or sample count; 0 for the exact method
  bool alpha_is_m = true;  // r2hvc only: false means alpha = 1
};

struct ExperimentConfig {
  std::vector<PfShape> shapes;
  std::vector<int> dims;
  std::vector<int> set_sizes;
  int n_sets = 1;
  std::vector<double> ref_scalars;
  std::vector<MethodSpec> methods;
  int n_runs = 1;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "out";
};

inline void check_config(const ExperimentConfig& c) {
  if (c.shapes.empty() || c.dims.empty() || c.set_sizes.empty() ||
      c.ref_scalars.empty() || c.methods.empty()) {
    throw PipelineError(2, "config: every grid list must be nonempty");
  }
  if (c.n_sets < 1 || c.n_runs < 1) {
    throw PipelineError(2, "config: n_sets and n_runs must be >= 1");
  }
  for (const MethodSpec& m : c.methods) {
    if (m.method != Method::Exact && m.budget < 1) {
      throw PipelineError(2, "config: approximation budgets must be >= 1");
    }
  }
}

// Desk-scale defaults: the trends of the full published grid are already
// visible at m=3, N=20 with 30 sets, and the exact oracle stays cheap.
inline ExperimentConfig desk_scale_config() {
  ExperimentConfig c;
  c.shapes.assign(std::begin(kAllShapes), std::end(kAllShapes));
  c.dims = {3};
  c.set_sizes = {20};
  c.n_sets = 30;
  c.ref_scalars = {-0.2};
  c.methods = {{Method::R2Hvc, 500, true},
               {Method::R2Contribution, 500, true},
               {Method::MonteCarlo, 500, true},
               {Method::Exact, 0, true}};
  c.n_runs = 10;
  c.seed = 20250810;
  c.output_dir = "out";
  return c;
}

// The originally published 5-dimension grid. A 10-dimension variant exceeds
// the exact engine's guard; raise `dims` manually to generate those sets and
// run the approximation methods on them.
inline ExperimentConfig paper_scale_config() {
  ExperimentConfig c;
  c.shapes.assign(std::begin(kAllShapes), std::end(kAllShapes));
  c.dims = {5};
  c.set_sizes = {100, 200, 300, 400, 500};
  c.n_sets = 100;
  c.ref_scalars = {0.0, -0.1, -0.2, -0.3, -0.4};
  c.methods.clear();
  for (int budget = 100; budget <= 1000; budget += 100) {
    c.methods.push_back({Method::R2Hvc, budget, true});
    c.methods.push_back({Method::R2Contribution, budget, true});
    c.methods.push_back({Method::MonteCarlo, budget, true});
  }
  c.methods.push_back({Method::Exact, 0, true});
  c.n_runs = 30;
  c.seed = 20250810;
  c.output_dir = "out";
  return c;
}

inline nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  for (PfShape s : c.shapes) j["shapes"].push_back(to_string(s));
  j["dims"] = c.dims;
  j["set_sizes"] = c.set_sizes;
  j["n_sets"] = c.n_sets;
  j["ref_scalars"] = c.ref_scalars;
  for (const MethodSpec& m : c.methods) {
    nlohmann::json jm{{"name", to_string(m.method)}};
    if (m.method != Method::Exact) {
      jm["budget"] = m.budget;
      if (m.method == Method::R2Hvc) jm["alpha"] = m.alpha_is_m ? nlohmann::json("m") : nlohmann::json(1);
    }
    j["methods"].push_back(jm);
  }
  j["n_runs"] = c.n_runs;
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir.string();
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  try {
    for (const auto& s : j.at("shapes")) c.shapes.push_back(pf_shape_from_string(s.get<std::string>()));
    c.dims = j.at("dims").get<std::vector<int>>();
    c.set_sizes = j.at("set_sizes").get<std::vector<int>>();
    c.n_sets = j.at("n_sets").get<int>();
    c.ref_scalars = j.at("ref_scalars").get<std::vector<double>>();
    for (const auto& jm : j.at("methods")) {
      MethodSpec m;
      m.method = method_from_string(jm.at("name").get<std::string>());
      if (m.method != Method::Exact) m.budget = jm.at("budget").get<int>();
      if (m.method == Method::R2Hvc && jm.contains("alpha")) {
        if (jm["alpha"].is_string()) {
          if (jm["alpha"].get<std::string>() != "m") {
            throw std::invalid_argument("alpha must be 1 or \"m\"");
          }
          m.alpha_is_m = true;
        } else {
          if (jm["alpha"].get<int>() != 1) throw std::invalid_argument("alpha must be 1 or \"m\"");
          m.alpha_is_m = false;
        }
      }
      c.methods.push_back(m);
    }
    c.n_runs = j.at("n_runs").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.output_dir = j.at("output_dir").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw PipelineError(2, std::string("config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PipelineError(2, std::string("config: ") + e.what());
  }
  check_config(c);
  return c;
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PipelineError(2, "cannot read config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw PipelineError(2, "config parse error: " + std::string(e.what()));
  }
  return config_from_json(j);
}

namespace seeds {

inline std::uint64_t shape_ordinal(PfShape s) {
  for (std::uint64_t i = 0; i < std::size(kAllShapes); ++i) {
    if (kAllShapes[i] == s) return i;
  }
  return 0;
}

// Keyed on grid coordinates, not loop indices, so cells are self-contained.
inline std::uint64_t suite(std::uint64_t root, PfShape shape, int m, int n) {
  const std::uint64_t key = (shape_ordinal(shape) << 48) |
                            (static_cast<std::uint64_t>(m) << 32) |
                            static_cast<std::uint64_t>(n);
  return mix64(root ^ mix64(key ^ 0x5E75C0DEULL));
}

inline std::uint64_t directions(std::uint64_t root, int m, int budget, int run) {
  const std::uint64_t key = (static_cast<std::uint64_t>(m) << 40) |
                            (static_cast<std::uint64_t>(budget) << 16) |
                            static_cast<std::uint64_t>(run);
  return mix64(root ^ mix64(key ^ 0xD12EC7104ULL));
}

inline std::uint64_t monte_carlo(std::uint64_t root, std::uint64_t suite_seed,
                                 int set_index, int run) {
  const std::uint64_t key = (static_cast<std::uint64_t>(run) << 32) |
                            static_cast<std::uint64_t>(set_index);
  return mix64(root ^ mix64(suite_seed + 0x3C4A11ULL) ^ mix64(key));
}

}  // namespace seeds

namespace detail {

inline std::filesystem::path suite_dir(const ExperimentConfig& c, PfShape shape,
                                       int m, int n) {
  return c.output_dir / "sets" / to_string(shape) / (std::to_string(m) + "d") /
         std::to_string(n);
}

inline std::string set_id(PfShape shape, int m, int n, int index) {
  return std::string(to_string(shape)) + "_m" + std::to_string(m) + "_N" +
         std::to_string(n) + "_s" + std::to_string(index);
}

inline std::vector<SolutionSet> load_suite(const ExperimentConfig& c, PfShape shape,
                                           int m, int n) {
  const std::filesystem::path dir = suite_dir(c, shape, m, n);
  std::vector<SolutionSet> suite;
  suite.reserve(static_cast<std::size_t>(c.n_sets));
  for (int i = 0; i < c.n_sets; ++i) {
    const std::filesystem::path file = dir / ("set_" + std::to_string(i) + ".csv");
    if (!std::filesystem::exists(file)) {
      throw PipelineError(3, "missing solution set " + file.string() + "; run `hvc gen` first");
    }
    try {
      suite.push_back(read_solution_set(file).first);
    } catch (const std::runtime_error& e) {
      throw PipelineError(3, e.what());
    }
  }
  return suite;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct MethodOnSet {
  HvcEstimate estimate;
};

// one method evaluation; direction sets are sampled by the caller so the
// R2 methods share vectors within a run
inline HvcEstimate evaluate_method(const MethodSpec& spec, const SolutionSet& set,
                                   const ReferencePoint& ref, const DirectionSet* dirs,
                                   std::uint64_t mc_seed) {
  switch (spec.method) {
    case Method::R2Hvc: {
      R2HvcParams params;
      params.alpha = spec.alpha_is_m ? set.m : 1;
      params.directions = *dirs;
      return r2_hvc(set, ref, params);
    }
    case Method::R2Contribution:
      return r2_contribution(set, ref, *dirs);
    case Method::MonteCarlo:
      return monte_carlo_hvc(set, ref, spec.budget, mc_seed);
    case Method::Exact:
      return hvc_exact(set, ref);
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

// Write the benchmark suites as CSV + sidecar under
// output_dir/sets/<shape>/<m>d/<N>/set_<i>.csv.
inline void cmd_gen(const ExperimentConfig& c) {
  check_config(c);
  for (PfShape shape : c.shapes) {
    for (int m : c.dims) {
      for (int n : c.set_sizes) {
        const std::filesystem::path dir = detail::suite_dir(c, shape, m, n);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec || !std::filesystem::is_directory(dir)) {
          throw PipelineError(2, "cannot create " + dir.string());
        }
        const std::uint64_t suite_seed = seeds::suite(c.seed, shape, m, n);
        for (int i = 0; i < c.n_sets; ++i) {
          const std::uint64_t set_seed = derive_seed(suite_seed, static_cast<std::uint64_t>(i));
          const SolutionSet set = sample_front(shape, m, n, set_seed);
          SetSidecar meta;
          meta.shape = to_string(shape);
          meta.m = m;
          meta.n = n;
          meta.seed = set_seed;
          meta.orientation = set.orientation;
          try {
            write_solution_set(dir / ("set_" + std::to_string(i) + ".csv"), set, meta);
          } catch (const std::runtime_error& e) {
            throw PipelineError(2, e.what());
          }
        }
      }
    }
  }
}

inline const std::vector<std::string> kResultsHeader = {
    "set_id", "shape", "m", "N", "r", "method", "budget", "alpha", "run", "wall_time_s"};
inline const std::vector<std::string> kValuesHeader = {
    "set_id", "shape", "m", "N", "r", "method", "budget", "alpha", "run", "index", "value"};
inline const std::vector<std::string> kMetricsHeader = {
    "shape", "m", "N", "r", "method", "budget", "mean_consistency", "sd_consistency",
    "identification_rate", "sd_identification", "n_runs"};
inline const std::vector<std::string> kBenchHeader = {
    "shape", "m", "N", "r", "method", "budget", "alpha", "n_runs",
    "median_total_s", "mean_total_s"};

// Evaluate every configured method on every set: one results.csv row per
// (set, method, run) and the per-solution values in values.csv. Exact oracle
// rows are computed once per set (budget 0, run 0).
inline void cmd_run(const ExperimentConfig& c) {
  check_config(c);
  CsvTable results{kResultsHeader, {}};
  CsvTable values{kValuesHeader, {}};
  std::map<std::tuple<int, int, int>, DirectionSet> direction_cache;

  const auto emit = [&](const std::string& id, PfShape shape, int m, int n, double r,
                        const MethodSpec& spec, int run, const HvcEstimate& est) {
    const std::string r_s = format_double(r);
    const std::string method_s = to_string(spec.method);
    const std::string budget_s = std::to_string(est.budget);
    const std::string alpha_s = std::to_string(est.alpha);
    results.rows.push_back({id, to_string(shape), std::to_string(m), std::to_string(n),
                            r_s, method_s, budget_s, alpha_s, std::to_string(run),
                            format_double(est.wall_time_s)});
    for (std::size_t idx = 0; idx < est.values.size(); ++idx) {
      values.rows.push_back({id, to_string(shape), std::to_string(m), std::to_string(n),
                             r_s, method_s, budget_s, alpha_s, std::to_string(run),
                             std::to_string(idx), format_double(est.values[idx])});
    }
  };

  for (PfShape shape : c.shapes) {
    for (int m : c.dims) {
      for (int n : c.set_sizes) {
        const std::vector<SolutionSet> suite = detail::load_suite(c, shape, m, n);
        const std::uint64_t suite_seed = seeds::suite(c.seed, shape, m, n);
        for (double r_scalar : c.ref_scalars) {
          const ReferencePoint ref = reference_point(m, r_scalar);
          for (const MethodSpec& spec : c.methods) {
            if (spec.method == Method::Exact) {
              if (m > kMaxExactDimension) {
                throw PipelineError(4, "exact method requested at m=" + std::to_string(m) +
                                           " above the guard m<=" +
                                           std::to_string(kMaxExactDimension) +
                                           "; use the approximation methods there");
              }
              for (int i = 0; i < c.n_sets; ++i) {
                const HvcEstimate est = hvc_exact(suite[i], ref);
                emit(detail::set_id(shape, m, n, i), shape, m, n, r_scalar, spec, 0, est);
              }
              continue;
            }
            for (int run = 0; run < c.n_runs; ++run) {
              const DirectionSet* dirs = nullptr;
              if (spec.method != Method::MonteCarlo) {
                const auto key = std::make_tuple(m, spec.budget, run);
                auto it = direction_cache.find(key);
                if (it == direction_cache.end()) {
                  it = direction_cache
                           .emplace(key, sample_directions(
                                             m, spec.budget,
                                             seeds::directions(c.seed, m, spec.budget, run)))
                           .first;
                }
                dirs = &it->second;
              }
              for (int i = 0; i < c.n_sets; ++i) {
                const HvcEstimate est = detail::evaluate_method(
                    spec, suite[i], ref, dirs,
                    seeds::monte_carlo(c.seed, suite_seed, i, run));
                emit(detail::set_id(shape, m, n, i), shape, m, n, r_scalar, spec, run, est);
              }
            }
          }
        }
      }
    }
  }
  std::filesystem::create_directories(c.output_dir);
  try {
    write_csv(c.output_dir / "results.csv", results);
    write_csv(c.output_dir / "values.csv", values);
  } catch (const std::runtime_error& e) {
    throw PipelineError(2, e.what());
  }
}

namespace detail {

struct ValueRow {
  std::string set_id;
  std::string shape;
  int m = 0;
  int n = 0;
  std::string r;
  std::string method;
  int budget = 0;
  int alpha = 0;
  int run = 0;
  int index = 0;
  double value = 0.0;
};

inline std::vector<ValueRow> parse_values_csv(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw PipelineError(5, "missing " + path.string() + "; run `hvc run` first");
  }
  const CsvTable table = read_csv(path);
  if (table.header != kValuesHeader) {
    throw PipelineError(5, "unexpected columns in " + path.string());
  }
  std::vector<ValueRow> rows;
  rows.reserve(table.rows.size());
  for (const auto& raw : table.rows) {
    ValueRow v;
    v.set_id = raw[0];
    v.shape = raw[1];
    v.m = std::stoi(raw[2]);
    v.n = std::stoi(raw[3]);
    v.r = raw[4];
    v.method = raw[5];
    v.budget = std::stoi(raw[6]);
    v.alpha = std::stoi(raw[7]);
    v.run = std::stoi(raw[8]);
    v.index = std::stoi(raw[9]);
    v.value = parse_double(raw[10]);
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace detail

// Score every approximation group against the exact oracle rows and write
// metrics.csv (mean/sd over runs of the per-run averages over sets).
inline void cmd_eval(const ExperimentConfig& c) {
  const std::vector<detail::ValueRow> rows =
      detail::parse_values_csv(c.output_dir / "values.csv");

  // truth: (set_id, r) -> exact values by solution index
  std::map<std::pair<std::string, std::string>, std::vector<double>> truth;
  for (const auto& v : rows) {
    if (v.method != "exact") continue;
    auto& vec = truth[{v.set_id, v.r}];
    if (vec.size() <= static_cast<std::size_t>(v.index)) vec.resize(v.index + 1);
    vec[v.index] = v.value;
  }

  // approx groups: (shape, m, N, r, method, budget, alpha) -> run -> set -> values
  using GroupKey = std::tuple<std::string, int, int, std::string, std::string, int, int>;
  std::map<GroupKey, std::map<int, std::map<std::string, std::vector<double>>>> groups;
  for (const auto& v : rows) {
    if (v.method == "exact") continue;
    auto& vec = groups[{v.shape, v.m, v.n, v.r, v.method, v.budget, v.alpha}][v.run][v.set_id];
    if (vec.size() <= static_cast<std::size_t>(v.index)) vec.resize(v.index + 1);
    vec[v.index] = v.value;
  }

  CsvTable metrics{kMetricsHeader, {}};
  for (const auto& [key, by_run] : groups) {
    const auto& [shape, m, n, r, method, budget, alpha] = key;
    std::vector<double> run_consistency;
    std::vector<double> run_identification;
    for (const auto& [run, by_set] : by_run) {
      double consistency_sum = 0.0;
      std::size_t identified = 0;
      for (const auto& [id, approx_values] : by_set) {
        const auto t = truth.find({id, r});
        if (t == truth.end()) {
          throw PipelineError(5, "no exact oracle rows for set " + id + " at r=" + r);
        }
        HvcEstimate truth_est;
        truth_est.method = Method::Exact;
        truth_est.values = t->second;
        HvcEstimate approx_est;
        approx_est.method = method_from_string(method);
        approx_est.values = approx_values;
        consistency_sum += consistency_rate(truth_est, approx_est);
        if (correct_identification(truth_est, approx_est)) ++identified;
      }
      const double n_sets = static_cast<double>(by_set.size());
      run_consistency.push_back(consistency_sum / n_sets);
      run_identification.push_back(static_cast<double>(identified) / n_sets);
    }
    const RunAggregate cons =
        aggregate_runs(run_consistency, static_cast<int>(run_consistency.size()));
    const RunAggregate ident =
        aggregate_runs(run_identification, static_cast<int>(run_identification.size()));
    metrics.rows.push_back({shape, std::to_string(m), std::to_string(n), r, method,
                            std::to_string(budget), format_double(cons.mean),
                            format_double(cons.stddev), format_double(ident.mean),
                            format_double(ident.stddev), std::to_string(cons.n_runs)});
  }
  try {
    write_csv(c.output_dir / "metrics.csv", metrics);
  } catch (const std::runtime_error& e) {
    throw PipelineError(2, e.what());
  }
}

// Time each method over whole suites (sum of per-set method wall time,
// repeated n_runs times, median reported). Uses the first ref scalar.
inline void cmd_bench(const ExperimentConfig& c) {
  check_config(c);
  CsvTable bench{kBenchHeader, {}};
  const double r_scalar = c.ref_scalars.front();
  for (PfShape shape : c.shapes) {
    for (int m : c.dims) {
      for (int n : c.set_sizes) {
        const std::vector<SolutionSet> suite = detail::load_suite(c, shape, m, n);
        const std::uint64_t suite_seed = seeds::suite(c.seed, shape, m, n);
        const ReferencePoint ref = reference_point(m, r_scalar);
        for (const MethodSpec& spec : c.methods) {
          if (spec.method == Method::Exact && m > kMaxExactDimension) {
            throw PipelineError(4, "exact method requested at m=" + std::to_string(m) +
                                       " above the guard m<=" +
                                       std::to_string(kMaxExactDimension));
          }
          std::optional<DirectionSet> warm_dirs;
          if (spec.method == Method::R2Hvc || spec.method == Method::R2Contribution) {
            warm_dirs = sample_directions(m, spec.budget,
                                          seeds::directions(c.seed, m, spec.budget, 0));
          }
          // warm pass over the first set so first-touch effects stay out of run 0
          detail::evaluate_method(spec, suite.front(), ref,
                                  warm_dirs ? &*warm_dirs : nullptr,
                                  seeds::monte_carlo(c.seed, suite_seed, 0, 0));
          std::vector<double> totals;
          int alpha_meta = 0;
          for (int run = 0; run < c.n_runs; ++run) {
            DirectionSet dirs;
            if (warm_dirs) {
              dirs = run == 0 ? *warm_dirs
                              : sample_directions(m, spec.budget,
                                                  seeds::directions(c.seed, m, spec.budget, run));
            }
            double total = 0.0;
            for (int i = 0; i < c.n_sets; ++i) {
              const HvcEstimate est = detail::evaluate_method(
                  spec, suite[i], ref, warm_dirs ? &dirs : nullptr,
                  seeds::monte_carlo(c.seed, suite_seed, i, run));
              total += est.wall_time_s;
              alpha_meta = est.alpha;
            }
            totals.push_back(total);
          }
          double mean = 0.0;
          for (double t : totals) mean += t;
          mean /= static_cast<double>(totals.size());
          bench.rows.push_back({to_string(shape), std::to_string(m), std::to_string(n),
                                format_double(r_scalar), to_string(spec.method),
                                std::to_string(spec.budget), std::to_string(alpha_meta),
                                std::to_string(c.n_runs),
                                format_double(detail::median(totals)),
                                format_double(mean)});
        }
      }
    }
  }
  std::filesystem::create_directories(c.output_dir);
  try {
    write_csv(c.output_dir / "bench.csv", bench);
  } catch (const std::runtime_error& e) {
    throw PipelineError(2, e.what());
  }
}

// Reshape metrics.csv (and bench.csv when present) into per-figure tables:
// metric vs reference point, metric vs budget, metric vs N, runtime vs
// budget, plus a plain-text summary. No graphics are rendered.
inline void cmd_report(const ExperimentConfig& c) {
  const std::filesystem::path metrics_path = c.output_dir / "metrics.csv";
  if (!std::filesystem::exists(metrics_path)) {
    throw PipelineError(5, "missing " + metrics_path.string() + "; run `hvc eval` first");
  }
  const CsvTable metrics = read_csv(metrics_path);
  if (metrics.header != kMetricsHeader) {
    throw PipelineError(5, "unexpected columns in " + metrics_path.string());
  }
  if (metrics.rows.empty()) {
    throw PipelineError(5, "no metric rows in " + metrics_path.string());
  }

  struct MetricRow {
    std::string shape, method;
    int m, n, budget;
    double r, consistency, identification;
  };
  std::vector<MetricRow> rows;
  for (const auto& raw : metrics.rows) {
    rows.push_back({raw[0], raw[4], std::stoi(raw[1]), std::stoi(raw[2]),
                    std::stoi(raw[5]), parse_double(raw[3]), parse_double(raw[6]),
                    parse_double(raw[8])});
  }

  const std::filesystem::path dir = c.output_dir / "report";
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw PipelineError(2, "cannot create " + dir.string());

  const auto emit_table = [&](const std::string& name, auto order,
                              const std::vector<std::string>& header,
                              auto to_row) {
    std::vector<MetricRow> sorted = rows;
    std::sort(sorted.begin(), sorted.end(), order);
    CsvTable t{header, {}};
    for (const MetricRow& r : sorted) t.rows.push_back(to_row(r));
    try {
      write_csv(dir / name, t);
    } catch (const std::runtime_error& e) {
      throw PipelineError(2, e.what());
    }
  };

  emit_table(
      "metric_vs_ref.csv",
      [](const MetricRow& a, const MetricRow& b) {
        return std::tie(a.shape, a.m, a.n, a.method, a.budget, b.r) <
               std::tie(b.shape, b.m, b.n, b.method, b.budget, a.r);  // r descending
      },
      {"shape", "m", "N", "method", "budget", "r", "mean_consistency", "identification_rate"},
      [](const MetricRow& r) -> std::vector<std::string> {
        return {r.shape, std::to_string(r.m), std::to_string(r.n), r.method,
                std::to_string(r.budget), format_double(r.r), format_double(r.consistency),
                format_double(r.identification)};
      });

  emit_table(
      "metric_vs_budget.csv",
      [](const MetricRow& a, const MetricRow& b) {
        return std::tie(a.shape, a.m, a.n, a.method, a.r, a.budget) <
               std::tie(b.shape, b.m, b.n, b.method, b.r, b.budget);
      },
      {"shape", "m", "N", "method", "r", "budget", "mean_consistency", "identification_rate"},
      [](const MetricRow& r) -> std::vector<std::string> {
        return {r.shape, std::to_string(r.m), std::to_string(r.n), r.method,
                format_double(r.r), std::to_string(r.budget), format_double(r.consistency),
                format_double(r.identification)};
      });

  emit_table(
      "metric_vs_n.csv",
      [](const MetricRow& a, const MetricRow& b) {
        return std::tie(a.shape, a.m, a.method, a.budget, a.r, a.n) <
               std::tie(b.shape, b.m, b.method, b.budget, b.r, b.n);
      },
      {"shape", "m", "method", "budget", "r", "N", "mean_consistency", "identification_rate"},
      [](const MetricRow& r) -> std::vector<std::string> {
        return {r.shape, std::to_string(r.m), r.method, std::to_string(r.budget),
                format_double(r.r), std::to_string(r.n), format_double(r.consistency),
                format_double(r.identification)};
      });

  const std::filesystem::path bench_path = c.output_dir / "bench.csv";
  if (std::filesystem::exists(bench_path)) {
    const CsvTable bench = read_csv(bench_path);
    if (bench.header == kBenchHeader) {
      CsvTable t{{"shape", "m", "N", "method", "budget", "median_total_s"}, {}};
      std::vector<std::vector<std::string>> sorted = bench.rows;
      std::sort(sorted.begin(), sorted.end(),
                [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
                  return std::tie(a[0], a[1], a[2], a[4]) < std::tie(b[0], b[1], b[2], b[4]) ||
                         (std::tie(a[0], a[1], a[2], a[4]) == std::tie(b[0], b[1], b[2], b[4]) &&
                          std::stoi(a[5]) < std::stoi(b[5]));
                });
      for (const auto& row : sorted) {
        t.rows.push_back({row[0], row[1], row[2], row[4], row[5], row[8]});
      }
      write_csv(dir / "runtime_vs_budget.csv", t);
    }
  }

  std::ofstream summary(dir / "summary.txt");
  if (!summary) throw PipelineError(2, "cannot write summary");
  summary << "method averages over all grid cells\n";
  std::map<std::string, std::pair<double, double>> sums;
  std::map<std::string, int> counts;
  for (const MetricRow& r : rows) {
    sums[r.method].first += r.consistency;
    sums[r.method].second += r.identification;
    counts[r.method] += 1;
  }
  for (const auto& [method, s] : sums) {
    summary << "  " << method << ": mean consistency " << s.first / counts[method]
            << ", mean identification " << s.second / counts[method] << " ("
            << counts[method] << " cells)\n";
  }
  summary << "\nrows per table: metric_vs_ref " << rows.size() << ", metric_vs_budget "
          << rows.size() << ", metric_vs_n " << rows.size() << "\n";
}

}  // namespace hvc
