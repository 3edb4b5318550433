#pragma once

// Adapt-then-combine diffusion LMS for the target location, together with the
// distance-driven step-size controller, the running noise-variance estimate,
// and the two neighbor rules (variance-ranked selection and k-nearest).

#include <cstddef>
#include <span>
#include <vector>

#include "mobnet/sensing.hpp"
#include "mobnet/vec.hpp"

namespace mobnet {

struct StepSizePolicy {
  double alpha = 1.2;   // growth factor in the far field, > 1
  double beta = 0.85;   // decay factor near the target, in (0, 1)
  double gamma = 0.001; // weight of the squared innovation near the target
  double mu_min = 0.05;
  double mu_max = 1.0;
  double far_threshold = 400.0;  // squared length
};

struct EstimatorState {
  Vec w;                   // target estimate
  double mu = 0.5;         // step size
  double sigma2_hat = 0.0; // running innovation variance
  bool sigma2_ready = false;
  Vec m;                   // intermediate estimate of the current iteration
};

/// Node ids, ascending, always including the owning node.
using NeighborSet = std::vector<std::size_t>;

/// Weights aligned position-by-position with a NeighborSet.
struct CombinationWeights {
  std::vector<double> weights;
};

/// |w_est - x|^2 > s (strict).
bool is_far_field(const Vec& w_est, const Vec& x, double s);

/// Far: min(alpha mu, mu_max). Near: beta mu + gamma e^2 clamped to
/// [mu_min, mu_max].
double update_step_size(double mu_prev, bool far, double e, const StepSizePolicy& policy);

/// d - u . w_prev
double a_priori_error(double d, const Direction& u, const Vec& w_prev);

/// eta sigma2_prev + (1 - eta) e^2
double update_variance_estimate(double sigma2_prev, double e, double eta);

/// Nodes j with |x_j - x_k| <= radius and variances[j] <= variances[k].
///
/// `sq_dist_row[j]` is |x_j - x_k|^2. With candidate_limit > 0 only the
/// candidate_limit nearest other nodes inside the radius are considered before
/// the variance test (ties by lower id); 0 means the whole radius ball.
NeighborSet select_neighbors(std::size_t k, std::span<const double> sq_dist_row,
                             std::span<const double> variances, double radius,
                             std::size_t candidate_limit = 0);

/// k plus up to `count` nearest other nodes within `radius`, ties by lower id.
NeighborSet knn_neighbors(std::size_t k, std::span<const double> sq_dist_row, std::size_t count,
                          double radius);

/// Every node within `radius` (including k).
NeighborSet radius_neighbors(std::size_t k, std::span<const double> sq_dist_row, double radius);

CombinationWeights uniform_weights(const NeighborSet& neighbors);

/// m = w_prev + mu * sum_l c_l u_l^T (d_l - u_l w_prev), l over `neighbors`,
/// reading measurements by node id.
Vec adapt(const Vec& w_prev, double mu, const NeighborSet& neighbors,
          std::span<const Measurement> measurements, const CombinationWeights& c);

/// sum_l a_l values[l], l over `neighbors`.
Vec combine(const NeighborSet& neighbors, std::span<const Vec> values,
            const CombinationWeights& a);

}  // namespace mobnet
