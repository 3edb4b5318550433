#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mobnet/simulation.hpp"

namespace mobnet {
namespace {

void accumulate(MetricsFrame& acc, const MetricsFrame& f) {
  acc.msd += f.msd;
  acc.mean_mu += f.mean_mu;
  acc.mean_neighbor_count += f.mean_neighbor_count;
  acc.mean_distance_to_target += f.mean_distance_to_target;
  acc.min_mu = std::min(acc.min_mu, f.min_mu);
  acc.max_mu = std::max(acc.max_mu, f.max_mu);
  acc.min_distance_to_target += f.min_distance_to_target;
}

MetricsFrame start_from(const MetricsFrame& f) {
  MetricsFrame acc;
  acc.iteration = f.iteration;
  acc.mean_neighbor_count = 0.0;
  acc.min_mu = f.min_mu;
  acc.max_mu = f.max_mu;
  return acc;
}

void scale(MetricsFrame& acc, double runs) {
  acc.msd /= runs;
  acc.mean_mu /= runs;
  acc.mean_neighbor_count /= runs;
  acc.mean_distance_to_target /= runs;
  acc.min_distance_to_target /= runs;
}

MetricsFrame average_initial(std::span<const RunResult> runs) {
  MetricsFrame acc = start_from(runs.front().initial);
  for (const auto& r : runs) accumulate(acc, r.initial);
  scale(acc, static_cast<double>(runs.size()));
  return acc;
}

}  // namespace

// min_mu / max_mu are the extremes over all runs, not means; the other
// fields are plain means. Runs are summed in index order so the result does
// not depend on which thread produced which run.
std::vector<MetricsFrame> average_frames(std::span<const RunResult> runs) {
  if (runs.empty()) return {};
  const std::size_t len = runs.front().frames.size();
  std::vector<MetricsFrame> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    MetricsFrame acc = start_from(runs.front().frames[i]);
    for (const auto& r : runs) accumulate(acc, r.frames[i]);
    scale(acc, static_cast<double>(runs.size()));
    out.push_back(std::move(acc));
  }
  return out;
}

MonteCarloResult monte_carlo(const SimConfig& config, unsigned jobs) {
  config.validate();
  MonteCarloResult result;
  result.runs.resize(config.n_runs);

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, config.n_runs));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t r = next++; r < config.n_runs; r = next++) {
      try {
        result.runs[r] = run(config, config.base_seed + r);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.mean_initial = average_initial(result.runs);
  result.mean_frames = average_frames(result.runs);
  return result;
}

}  // namespace mobnet
