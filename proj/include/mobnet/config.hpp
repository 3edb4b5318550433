#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mobnet/estimation.hpp"
#include "mobnet/motion.hpp"
#include "mobnet/vec.hpp"

namespace mobnet {

enum class Mode { proposed, baseline_atc };

/// Which neighbor uses the variance-ranked selection applies to in proposed
/// mode. The collision term follows `collision_k` unless the scope is
/// all_neighbor_uses.
enum class SelectiveScope { diffusions_only, all_neighbor_uses };

std::string_view to_string(Mode mode);
std::string_view to_string(SelectiveScope scope);

/// Raised for any configuration problem; the message names the offending key
/// or invariant.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimConfig {
  std::size_t dim = 2;
  std::size_t n_nodes = 50;
  Vec target{120.0, 120.0};
  double kappa = 0.01;
  double radius = 6.0;
  Mode mode = Mode::proposed;

  double baseline_mu = 0.5;
  std::size_t baseline_k = 4;

  double mu_init = 0.5;
  StepSizePolicy step_policy;
  double eta = 0.95;
  /// Nearest candidates considered by the variance-ranked rule (0 = whole ball).
  std::size_t selection_candidates = 4;
  SelectiveScope selective_scope = SelectiveScope::diffusions_only;

  MotionPolicy motion_policy;
  /// Nearest neighbors within `radius` entering the collision term
  /// (0 = every node within `radius`).
  std::size_t collision_k = 4;

  double init_cube_side = 10.0;
  Vec w_init{0.0, 0.0};

  std::size_t n_iterations = 300;
  std::size_t n_runs = 50;
  std::uint64_t base_seed = 1;
  /// Record node snapshots every this many iterations (0 = never).
  std::size_t snapshot_every = 0;
  /// Additional iterations to snapshot.
  std::vector<std::size_t> snapshot_iterations;

  /// Throws ConfigError naming the first violated invariant.
  void validate() const;

  bool wants_snapshot(std::size_t iteration) const;
};

}  // namespace mobnet
