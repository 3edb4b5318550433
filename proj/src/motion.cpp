#include "mobnet/motion.hpp"

#include <cassert>

namespace mobnet {

Vec consensus_adapt(const Vec& vg_prev, double delta, const NeighborSet& neighbors,
                    std::span<const Vec> velocities, const CombinationWeights& c) {
  assert(c.weights.size() == neighbors.size());
  Vec pull(vg_prev.dim());
  for (std::size_t n = 0; n < neighbors.size(); ++n) {
    pull += (velocities[neighbors[n]] - vg_prev) * c.weights[n];
  }
  return vg_prev + delta * pull;
}

Vec consensus_combine(const NeighborSet& neighbors, std::span<const Vec> intermediates,
                      const CombinationWeights& a) {
  return combine(neighbors, intermediates, a);
}

Vec spacing_term(const Vec& x, std::span<const Vec> others, double spacing, double epsilon) {
  Vec sum(x.dim());
  for (const Vec& xl : others) {
    const Vec diff = xl - x;
    const double len = norm(diff);
    if (!(len > epsilon)) continue;
    sum += diff * ((len - spacing) / len);
  }
  return sum;
}

Vec update_velocity(const Vec& w_prev, const Vec& x_prev, const Vec& vg_prev,
                    std::span<const Vec> others, const MotionPolicy& policy, double epsilon) {
  Vec v = policy.xi2 * vg_prev;
  if (auto seek = direction_toward(x_prev, w_prev, epsilon)) v += policy.xi1 * seek->vec();
  v += policy.xi3 * spacing_term(x_prev, others, policy.spacing, epsilon);
  return v;
}

Vec update_location(const Vec& x_prev, const Vec& v, double dt) { return x_prev + v * dt; }

}  // namespace mobnet
