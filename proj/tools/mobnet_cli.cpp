// mobnet: run the mobile diffusion network simulator and write metric and
// snapshot CSVs.
//
//   mobnet run      --config cfg.txt --output out/ [--mode baseline_atc]
//   mobnet compare  --config cfg.txt --output out/ --snapshots 1,50,150,300
//   mobnet validate --config cfg.txt
//
// Exit status: 0 success, 1 invalid configuration or arguments, 2 I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mobnet/config_io.hpp"
#include "mobnet/output.hpp"
#include "mobnet/simulation.hpp"

namespace fs = std::filesystem;
using namespace mobnet;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct Options {
  std::string config_path;
  std::string output_dir = "out";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<std::size_t> iterations;
  std::optional<std::string> mode;
  std::optional<std::string> snapshots;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

SimConfig resolve_config(const Options& opt) {
  SimConfig config = opt.config_path.empty() ? SimConfig{} : load_config(opt.config_path);
  if (opt.seed) config.base_seed = *opt.seed;
  if (opt.runs) config.n_runs = *opt.runs;
  if (opt.iterations) config.n_iterations = *opt.iterations;
  if (opt.mode) config.mode = parse_mode(*opt.mode);
  if (opt.snapshots) config.snapshot_iterations = parse_iteration_list(*opt.snapshots);
  config.validate();
  return config;
}

// Runs every mode first and writes only once all of them have finished.
void run_modes(SimConfig config, const std::vector<Mode>& modes, const Options& opt) {
  std::vector<MonteCarloResult> results;
  for (Mode mode : modes) {
    config.mode = mode;
    results.push_back(monte_carlo(config, opt.jobs));
  }

  const fs::path dir(opt.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  for (std::size_t i = 0; i < modes.size(); ++i) {
    const std::string tag(to_string(modes[i]));
    const MonteCarloResult& mc = results[i];
    write_metrics_csv(dir / ("metrics_" + tag + ".csv"), mc.mean_frames);

    // Positions are per-run and are not averaged; snapshots come from the
    // first run of the batch.
    const RunResult& first = mc.runs.front();
    if (!first.initial.nodes.empty()) {
      write_snapshot_csv(dir / ("snapshot_" + tag + "_0.csv"), first.initial, config.dim);
    }
    for (const auto& frame : first.frames) {
      if (frame.nodes.empty()) continue;
      write_snapshot_csv(dir / ("snapshot_" + tag + "_" + std::to_string(frame.iteration) + ".csv"),
                         frame, config.dim);
    }
    const auto& last = mc.mean_frames.empty() ? mc.mean_initial : mc.mean_frames.back();
    std::cerr << tag << ": " << config.n_runs << " runs x " << config.n_iterations
              << " iterations, final msd " << last.msd << ", mean distance "
              << last.mean_distance_to_target << "\n";
  }
}

void add_common(CLI::App* cmd, Options& opt, bool simulate) {
  cmd->add_option("--config", opt.config_path, "Configuration file (defaults apply when omitted)");
  if (!simulate) return;
  cmd->add_option("--output", opt.output_dir, "Output directory")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "Override run.base_seed");
  cmd->add_option("--runs", opt.runs, "Override run.runs");
  cmd->add_option("--iterations", opt.iterations, "Override run.iterations");
  cmd->add_option("--snapshots", opt.snapshots, "Comma-separated iterations to snapshot");
  cmd->add_option("--jobs", opt.jobs, "Parallel Monte Carlo runs")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobile diffusion adaptive network simulator"};
  app.require_subcommand(1);
  Options opt;

  auto* run_cmd = app.add_subcommand("run", "Simulate one algorithm variant");
  add_common(run_cmd, opt, true);
  run_cmd->add_option("--mode", opt.mode, "proposed | baseline_atc");

  auto* compare_cmd = app.add_subcommand("compare", "Simulate both variants on shared seeds");
  add_common(compare_cmd, opt, true);

  auto* validate_cmd = app.add_subcommand("validate", "Check a configuration file and print it");
  add_common(validate_cmd, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    const SimConfig config = resolve_config(opt);
    if (*validate_cmd) {
      std::cout << format_config(config);
    } else if (*run_cmd) {
      run_modes(config, {config.mode}, opt);
    } else {
      run_modes(config, {Mode::proposed, Mode::baseline_atc}, opt);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return 0;
}
