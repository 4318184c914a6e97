// hvc: generate benchmark suites, run hypervolume-contribution methods,
// evaluate accuracy against the exact oracle, benchmark runtimes, and emit
// report tables. All subcommands share one JSON config plus flag overrides.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hvc/experiment.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool paper_scale = false;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
  sub->add_option("--config", flags.config_path, "JSON experiment config");
  sub->add_option("--out", flags.out_dir, "override output directory");
  sub->add_option("--seed", flags.seed, "override root seed")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  sub->add_flag("--paper-scale", flags.paper_scale,
                "start from the full published grid instead of desk-scale defaults");
}

hvc::ExperimentConfig resolve_config(const CommonFlags& flags) {
  hvc::ExperimentConfig cfg;
  if (!flags.config_path.empty()) {
    cfg = hvc::load_config(flags.config_path);
  } else {
    cfg = flags.paper_scale ? hvc::paper_scale_config() : hvc::desk_scale_config();
  }
  if (flags.seed_set) cfg.seed = flags.seed;
  if (!flags.out_dir.empty()) cfg.output_dir = flags.out_dir;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypervolume contribution toolkit: exact, R2-based and Monte Carlo methods"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::function<void(const hvc::ExperimentConfig&)> fn;
  };
  const Sub subs[] = {
      {"gen", "generate benchmark solution-set suites", hvc::cmd_gen},
      {"run", "run every configured method over the suites", hvc::cmd_run},
      {"eval", "score methods against the exact oracle", hvc::cmd_eval},
      {"bench", "benchmark method runtimes", hvc::cmd_bench},
      {"report", "emit per-figure tables and a text summary", hvc::cmd_report},
  };

  CommonFlags flags[std::size(subs)];
  const Sub* chosen = nullptr;
  const CommonFlags* chosen_flags = nullptr;
  for (std::size_t i = 0; i < std::size(subs); ++i) {
    CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
    add_common(sub, flags[i]);
    sub->callback([&, i] {
      chosen = &subs[i];
      chosen_flags = &flags[i];
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    chosen->fn(resolve_config(*chosen_flags));
  } catch (const hvc::PipelineError& e) {
    std::cerr << "hvc " << chosen->name << ": " << e.what() << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "hvc " << chosen->name << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
