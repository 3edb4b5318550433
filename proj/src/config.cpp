#include "mobnet/config.hpp"

#include <algorithm>
#include <cmath>

namespace mobnet {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

bool finite(double v) { return std::isfinite(v); }

void require_vec(const Vec& v, std::size_t dim, const std::string& key) {
  require(v.dim() == dim, key + ": dimension mismatch (expected " + std::to_string(dim) +
                              " components, got " + std::to_string(v.dim()) + ")");
  require(v.is_finite(), key + ": components must be finite");
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::proposed ? "proposed" : "baseline_atc";
}

std::string_view to_string(SelectiveScope scope) {
  return scope == SelectiveScope::diffusions_only ? "diffusions_only" : "all_neighbor_uses";
}

void SimConfig::validate() const {
  require(dim == 2 || dim == 3, "dim: must be 2 or 3");
  require(n_nodes >= 1, "nodes: must be positive");
  require_vec(target, dim, "target");
  require_vec(w_init, dim, "init.w");
  require(finite(kappa) && kappa >= 0.0, "sensing.kappa: must be nonnegative");
  require(finite(radius) && radius > 0.0, "network.radius: must be positive");

  require(finite(baseline_mu) && baseline_mu > 0.0, "baseline.mu: must be positive");
  require(baseline_k >= 1, "baseline.k: must be positive");

  const auto& sp = step_policy;
  require(finite(sp.alpha) && sp.alpha > 1.0, "step.alpha: must exceed 1");
  require(finite(sp.beta) && sp.beta > 0.0 && sp.beta < 1.0, "step.beta: must lie in (0, 1)");
  require(finite(sp.gamma) && sp.gamma >= 0.0, "step.gamma: must be nonnegative");
  require(finite(sp.mu_min) && sp.mu_min > 0.0, "step.mu_min: must be positive");
  require(finite(sp.mu_max) && sp.mu_max > sp.mu_min, "step.mu_max: must exceed step.mu_min");
  require(finite(sp.far_threshold) && sp.far_threshold > 0.0,
          "step.far_threshold: must be positive");
  require(finite(mu_init) && mu_init > 0.0, "step.mu_init: must be positive");
  require(finite(eta) && eta > 0.0 && eta < 1.0, "variance.eta: must lie in (0, 1)");

  const auto& mp = motion_policy;
  require(finite(mp.xi1) && mp.xi1 >= 0.0, "motion.xi1: must be nonnegative");
  require(finite(mp.xi2) && mp.xi2 >= 0.0, "motion.xi2: must be nonnegative");
  require(finite(mp.xi3) && mp.xi3 >= 0.0, "motion.xi3: must be nonnegative");
  require(finite(mp.spacing) && mp.spacing > 0.0, "motion.spacing: must be positive");
  require(finite(mp.delta) && mp.delta > 0.0, "motion.delta: must be positive");
  require(finite(mp.dt) && mp.dt > 0.0, "motion.dt: must be positive");

  require(finite(init_cube_side) && init_cube_side > 0.0, "init.cube_side: must be positive");
  require(n_runs >= 1, "run.runs: must be positive");
}

bool SimConfig::wants_snapshot(std::size_t iteration) const {
  if (snapshot_every > 0 && iteration % snapshot_every == 0) return true;
  return std::find(snapshot_iterations.begin(), snapshot_iterations.end(), iteration) !=
         snapshot_iterations.end();
}

}  // namespace mobnet
