#include "mobnet/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mobnet {
namespace {

// Stream ids at or above this are reserved for run-level draws; node k uses
// stream k.
constexpr std::uint64_t kInitStream = std::uint64_t{1} << 63;

PointSet positions_of(std::span<const NodeState> nodes, std::size_t dim) {
  PointSet points(nodes.size(), dim);
  for (std::size_t k = 0; k < nodes.size(); ++k) points.set(k, nodes[k].motion.x);
  return points;
}

PointSet estimates_of(std::span<const NodeState> nodes, std::size_t dim) {
  PointSet points(nodes.size(), dim);
  for (std::size_t k = 0; k < nodes.size(); ++k) points.set(k, nodes[k].estimator.w);
  return points;
}

double mean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::vector<NodeState> init_network(const SimConfig& config, std::uint64_t seed) {
  const std::size_t dim = config.dim;
  Rng init = make_substream(seed, kInitStream);
  std::uniform_real_distribution<double> coord(0.0, config.init_cube_side);
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> height(-1.0, 1.0);

  const double mu0 = config.mode == Mode::proposed ? config.mu_init : config.baseline_mu;

  std::vector<NodeState> nodes(config.n_nodes);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    NodeState& node = nodes[k];
    node.id = k;
    node.motion.x = Vec(dim);
    for (std::size_t a = 0; a < dim; ++a) node.motion.x[a] = coord(init);
    const double az = azimuth(init);
    // Uniform on the sphere in 3D: elevation = asin(U(-1, 1)).
    const double el = dim == 3 ? std::asin(height(init)) : 0.0;
    node.motion.v = direction_from_angles(az, el, dim).vec();
    node.motion.vg = Vec(dim);
    node.motion.s = Vec(dim);
    node.estimator.w = config.w_init;
    node.estimator.m = config.w_init;
    node.estimator.mu = mu0;
    node.rng = make_substream(seed, k);
  }
  return nodes;
}

StepTrace step(std::vector<NodeState>& nodes, const SimConfig& config,
               const DistanceKernels& kernels) {
  const std::size_t n = nodes.size();
  const bool proposed = config.mode == Mode::proposed;
  StepTrace trace;
  trace.diffusion_neighbors.resize(n);
  trace.collision_neighbors.resize(n);

  // 1. Measurements.
  std::vector<Measurement> meas;
  meas.reserve(n);
  for (auto& node : nodes) {
    meas.push_back(measure(node.motion.x, config.target, config.kappa, node.rng));
  }

  // 2. Step-size controller, on w_{i-1} and x_{i-1}.
  std::vector<double> innovation(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto& est = nodes[k].estimator;
    innovation[k] = a_priori_error(meas[k].d, meas[k].u, est.w);
    if (!proposed) continue;
    if (!est.sigma2_ready) {
      est.sigma2_hat = innovation[k] * innovation[k];
      est.sigma2_ready = true;
    }
    const bool far = is_far_field(est.w, nodes[k].motion.x, config.step_policy.far_threshold);
    est.mu = update_step_size(est.mu, far, innovation[k], config.step_policy);
  }

  // 3. Neighbor sets from the pre-step locations.
  const PointSet positions = positions_of(nodes, config.dim);
  std::vector<double> sq_dist(n * n);
  kernels.pairwise_sq(positions, sq_dist);
  std::vector<double> variances(n);
  for (std::size_t k = 0; k < n; ++k) variances[k] = nodes[k].estimator.sigma2_hat;

  for (std::size_t k = 0; k < n; ++k) {
    const std::span<const double> row(sq_dist.data() + k * n, n);
    trace.diffusion_neighbors[k] =
        proposed ? select_neighbors(k, row, variances, config.radius, config.selection_candidates)
                 : knn_neighbors(k, row, config.baseline_k, config.radius);
    if (proposed && config.selective_scope == SelectiveScope::all_neighbor_uses) {
      trace.collision_neighbors[k] = trace.diffusion_neighbors[k];
    } else if (config.collision_k > 0) {
      trace.collision_neighbors[k] = knn_neighbors(k, row, config.collision_k, config.radius);
    } else {
      trace.collision_neighbors[k] = radius_neighbors(k, row, config.radius);
    }
  }

  // 4. Adaptation against the snapshot.
  std::vector<Vec> velocities(n);
  for (std::size_t k = 0; k < n; ++k) velocities[k] = nodes[k].motion.v;
  std::vector<CombinationWeights> weights(n);
  std::vector<Vec> m(n);
  std::vector<Vec> s(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& nbrs = trace.diffusion_neighbors[k];
    weights[k] = uniform_weights(nbrs);
    const auto& est = nodes[k].estimator;
    m[k] = adapt(est.w, est.mu, nbrs, meas, weights[k]);
    s[k] = consensus_adapt(nodes[k].motion.vg, config.motion_policy.delta, nbrs, velocities,
                           weights[k]);
  }

  // 5-7. Combination, variance tracker, motion. Writes go to locals until all
  // nodes are done so the motion rule still reads pre-step state.
  std::vector<Vec> w_new(n);
  std::vector<Vec> vg_new(n);
  std::vector<Vec> v_new(n);
  std::vector<Vec> x_new(n);
  std::vector<Vec> others;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& nbrs = trace.diffusion_neighbors[k];
    w_new[k] = combine(nbrs, m, weights[k]);
    vg_new[k] = consensus_combine(nbrs, s, weights[k]);

    others.clear();
    for (std::size_t j : trace.collision_neighbors[k]) {
      if (j != k) others.push_back(nodes[j].motion.x);
    }
    const auto& mot = nodes[k].motion;
    v_new[k] = update_velocity(nodes[k].estimator.w, mot.x, mot.vg, others,
                               config.motion_policy);
    x_new[k] = update_location(mot.x, v_new[k], config.motion_policy.dt);
  }

  for (std::size_t k = 0; k < n; ++k) {
    auto& est = nodes[k].estimator;
    auto& mot = nodes[k].motion;
    est.m = m[k];
    est.w = w_new[k];
    if (proposed) est.sigma2_hat = update_variance_estimate(est.sigma2_hat, innovation[k], config.eta);
    mot.s = s[k];
    mot.vg = vg_new[k];
    mot.v = v_new[k];
    mot.x = x_new[k];
  }
  return trace;
}

double msd(std::span<const NodeState> nodes, const Vec& target, const DistanceKernels& kernels) {
  std::vector<double> sq(nodes.size());
  kernels.sq_to_point(estimates_of(nodes, target.dim()), target, sq);
  return mean(sq);
}

MetricsFrame measure_frame(std::span<const NodeState> nodes, const SimConfig& config,
                           std::size_t iteration, double mean_neighbor_count, bool with_snapshot,
                           const DistanceKernels& kernels) {
  MetricsFrame frame;
  frame.iteration = iteration;
  frame.msd = msd(nodes, config.target, kernels);
  frame.mean_neighbor_count = mean_neighbor_count;

  std::vector<double> sq(nodes.size());
  kernels.sq_to_point(positions_of(nodes, config.dim), config.target, sq);
  double dist_sum = 0.0;
  frame.min_distance_to_target = std::sqrt(sq.front());
  for (double d2 : sq) {
    const double d = std::sqrt(d2);
    dist_sum += d;
    frame.min_distance_to_target = std::min(frame.min_distance_to_target, d);
  }
  frame.mean_distance_to_target = dist_sum / static_cast<double>(nodes.size());

  double mu_sum = 0.0;
  frame.min_mu = frame.max_mu = nodes.front().estimator.mu;
  for (const auto& node : nodes) {
    mu_sum += node.estimator.mu;
    frame.min_mu = std::min(frame.min_mu, node.estimator.mu);
    frame.max_mu = std::max(frame.max_mu, node.estimator.mu);
  }
  frame.mean_mu = mu_sum / static_cast<double>(nodes.size());

  if (with_snapshot) {
    frame.nodes.reserve(nodes.size());
    for (const auto& node : nodes) {
      frame.nodes.push_back({node.motion.x, node.motion.v, node.estimator.w});
    }
  }
  return frame;
}

RunResult run(const SimConfig& config, std::uint64_t seed) {
  config.validate();
  const DistanceKernels& kern = kernels();

  RunResult result;
  result.seed = seed;
  auto nodes = init_network(config, seed);
  result.initial = measure_frame(nodes, config, 0, 1.0, config.wants_snapshot(0), kern);
  result.frames.reserve(config.n_iterations);
  for (std::size_t i = 1; i <= config.n_iterations; ++i) {
    const StepTrace trace = step(nodes, config, kern);
    double count = 0.0;
    for (const auto& nbrs : trace.diffusion_neighbors) count += static_cast<double>(nbrs.size());
    count /= static_cast<double>(nodes.size());
    result.frames.push_back(measure_frame(nodes, config, i, count, config.wants_snapshot(i), kern));
  }
  return result;
}

}  // namespace mobnet
