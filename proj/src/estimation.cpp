#include "mobnet/estimation.hpp"

#include <algorithm>
#include <cassert>

namespace mobnet {
namespace {

// Other nodes inside the ball, nearest first, ties by lower id.
std::vector<std::size_t> ball_by_distance(std::size_t k, std::span<const double> sq_dist_row,
                                          double radius) {
  const double r2 = radius * radius;
  std::vector<std::size_t> ids;
  for (std::size_t j = 0; j < sq_dist_row.size(); ++j) {
    if (j != k && sq_dist_row[j] <= r2) ids.push_back(j);
  }
  std::stable_sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return sq_dist_row[a] < sq_dist_row[b];
  });
  return ids;
}

NeighborSet with_self(std::size_t k, std::vector<std::size_t> others) {
  others.push_back(k);
  std::sort(others.begin(), others.end());
  return others;
}

}  // namespace

bool is_far_field(const Vec& w_est, const Vec& x, double s) {
  return squared_distance(w_est, x) > s;
}

double update_step_size(double mu_prev, bool far, double e, const StepSizePolicy& policy) {
  if (far) return std::min(policy.alpha * mu_prev, policy.mu_max);
  const double mu = policy.beta * mu_prev + policy.gamma * e * e;
  return std::clamp(mu, policy.mu_min, policy.mu_max);
}

double a_priori_error(double d, const Direction& u, const Vec& w_prev) {
  return d - dot(u, w_prev);
}

double update_variance_estimate(double sigma2_prev, double e, double eta) {
  return eta * sigma2_prev + (1.0 - eta) * e * e;
}

NeighborSet select_neighbors(std::size_t k, std::span<const double> sq_dist_row,
                             std::span<const double> variances, double radius,
                             std::size_t candidate_limit) {
  assert(sq_dist_row.size() == variances.size() && k < variances.size());
  auto candidates = ball_by_distance(k, sq_dist_row, radius);
  if (candidate_limit > 0 && candidates.size() > candidate_limit) {
    candidates.resize(candidate_limit);
  }
  std::erase_if(candidates, [&](std::size_t j) { return !(variances[j] <= variances[k]); });
  return with_self(k, std::move(candidates));
}

NeighborSet knn_neighbors(std::size_t k, std::span<const double> sq_dist_row, std::size_t count,
                          double radius) {
  auto others = ball_by_distance(k, sq_dist_row, radius);
  if (others.size() > count) others.resize(count);
  return with_self(k, std::move(others));
}

NeighborSet radius_neighbors(std::size_t k, std::span<const double> sq_dist_row, double radius) {
  return with_self(k, ball_by_distance(k, sq_dist_row, radius));
}

CombinationWeights uniform_weights(const NeighborSet& neighbors) {
  assert(!neighbors.empty());
  return {std::vector<double>(neighbors.size(), 1.0 / static_cast<double>(neighbors.size()))};
}

Vec adapt(const Vec& w_prev, double mu, const NeighborSet& neighbors,
          std::span<const Measurement> measurements, const CombinationWeights& c) {
  assert(c.weights.size() == neighbors.size());
  Vec grad(w_prev.dim());
  for (std::size_t n = 0; n < neighbors.size(); ++n) {
    const Measurement& obs = measurements[neighbors[n]];
    grad += obs.u.vec() * (c.weights[n] * a_priori_error(obs.d, obs.u, w_prev));
  }
  return w_prev + mu * grad;
}

Vec combine(const NeighborSet& neighbors, std::span<const Vec> values,
            const CombinationWeights& a) {
  assert(a.weights.size() == neighbors.size() && !neighbors.empty());
  Vec out(values[neighbors.front()].dim());
  for (std::size_t n = 0; n < neighbors.size(); ++n) out += values[neighbors[n]] * a.weights[n];
  return out;
}

}  // namespace mobnet
