#pragma once

// Network state, the per-iteration update for both algorithm variants, and
// Monte Carlo averaging of the resulting metric series.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mobnet/config.hpp"
#include "mobnet/estimation.hpp"
#include "mobnet/kernels.hpp"
#include "mobnet/motion.hpp"
#include "mobnet/sensing.hpp"

namespace mobnet {

struct NodeState {
  std::size_t id = 0;
  MotionState motion;
  EstimatorState estimator;
  Rng rng;
};

struct NodeSnapshot {
  Vec x;
  Vec v;
  Vec w;
};

struct MetricsFrame {
  std::size_t iteration = 0;
  double msd = 0.0;
  double mean_mu = 0.0;
  double mean_neighbor_count = 1.0;  // diffusion neighbors, self included
  double mean_distance_to_target = 0.0;
  // Not part of the CSV schema; used for diagnostics and acceptance checks.
  double min_mu = 0.0;
  double max_mu = 0.0;
  double min_distance_to_target = 0.0;
  std::vector<NodeSnapshot> nodes;  // empty unless a snapshot was requested
};

struct RunResult {
  std::uint64_t seed = 0;
  MetricsFrame initial;               // state before the first iteration
  std::vector<MetricsFrame> frames;   // iterations 1..n_iterations
};

/// Everything one call to `step` produced besides the new node states.
struct StepTrace {
  std::vector<NeighborSet> diffusion_neighbors;
  std::vector<NeighborSet> collision_neighbors;
};

/// N nodes uniform in [0, side]^D with unit-speed random headings, a shared
/// initial estimate, zero group velocity and per-node noise substreams.
std::vector<NodeState> init_network(const SimConfig& config, std::uint64_t seed);

/// One full iteration for every node:
///   1. measurements at the current locations
///   2. step-size controller (proposed mode)
///   3. neighbor sets from the pre-step locations
///   4. adaptation of the target estimate and of the group velocity
///   5. combination over the neighbors' intermediates from step 4
///   6. noise-variance tracker (proposed mode)
///   7. velocity and location update
/// Cross-node reads other than step 5 see the pre-step snapshot.
StepTrace step(std::vector<NodeState>& nodes, const SimConfig& config,
               const DistanceKernels& kernels = mobnet::kernels());

/// (1/N) sum_k |target - w_k|^2
double msd(std::span<const NodeState> nodes, const Vec& target,
           const DistanceKernels& kernels = mobnet::kernels());

MetricsFrame measure_frame(std::span<const NodeState> nodes, const SimConfig& config,
                           std::size_t iteration, double mean_neighbor_count,
                           bool with_snapshot, const DistanceKernels& kernels = mobnet::kernels());

/// Runs n_iterations from init_network(config, seed). Throws ConfigError
/// before stepping when the config is invalid.
RunResult run(const SimConfig& config, std::uint64_t seed);

struct MonteCarloResult {
  MetricsFrame mean_initial;
  std::vector<MetricsFrame> mean_frames;  // frame-wise mean over runs
  std::vector<RunResult> runs;            // run r used seed base_seed + r
};

/// n_runs independent runs, optionally on `jobs` threads. The averages do not
/// depend on `jobs`.
MonteCarloResult monte_carlo(const SimConfig& config, unsigned jobs = 1);

/// Frame-wise arithmetic mean (snapshots are not averaged).
std::vector<MetricsFrame> average_frames(std::span<const RunResult> runs);

}  // namespace mobnet
