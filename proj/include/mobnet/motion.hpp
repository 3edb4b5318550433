#pragma once

// Group-velocity consensus, the three-term velocity rule and the location
// integrator.

#include <span>

#include "mobnet/estimation.hpp"
#include "mobnet/vec.hpp"

namespace mobnet {

struct MotionPolicy {
  double xi1 = 0.8;      // target seeking
  double xi2 = 0.5;      // coherence with the group velocity estimate
  double xi3 = 0.8;      // spacing / collision avoidance
  double spacing = 2.0;  // desired inter-node distance r
  double delta = 0.5;    // consensus step size
  double dt = 0.5;
};

struct MotionState {
  Vec x;   // location
  Vec v;   // velocity
  Vec vg;  // local estimate of the group velocity
  Vec s;   // intermediate consensus value of the current iteration
};

/// s = vg_prev + delta * sum_l c_l (v_l - vg_prev), reading velocities by node id.
Vec consensus_adapt(const Vec& vg_prev, double delta, const NeighborSet& neighbors,
                    std::span<const Vec> velocities, const CombinationWeights& c);

/// Convex combination of the neighbors' intermediate values.
Vec consensus_combine(const NeighborSet& neighbors, std::span<const Vec> intermediates,
                      const CombinationWeights& a);

/// xi1 (w - x)/|w - x| + xi2 vg + xi3 sum_l (|x_l - x| - r)(x_l - x)/|x_l - x|.
///
/// `others` holds neighbor positions excluding the node itself. The seek term
/// vanishes when |w - x| <= epsilon and coincident neighbors are skipped.
Vec update_velocity(const Vec& w_prev, const Vec& x_prev, const Vec& vg_prev,
                    std::span<const Vec> others, const MotionPolicy& policy,
                    double epsilon = kCoincidenceEpsilon);

/// The collision-avoidance part of update_velocity alone, without xi3.
Vec spacing_term(const Vec& x, std::span<const Vec> others, double spacing,
                 double epsilon = kCoincidenceEpsilon);

Vec update_location(const Vec& x_prev, const Vec& v, double dt);

}  // namespace mobnet
