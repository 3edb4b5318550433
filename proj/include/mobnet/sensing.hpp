#pragma once

// Range-along-bearing measurements of a fixed target, with noise power that
// grows with the squared distance to it.

#include <cstdint>
#include <random>

#include "mobnet/vec.hpp"

namespace mobnet {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream). Streams are keyed, not
/// sequential, so adding nodes never shifts another node's draws.
Rng make_substream(std::uint64_t seed, std::uint64_t stream);

struct Measurement {
  Direction u;         // true bearing from the node to the target
  double d = 0.0;      // transformed scalar measurement, u . target + noise
  double sigma2_true;  // variance the noise sample was drawn with
};

/// kappa * |x - target|^2
double noise_variance(const Vec& x, const Vec& target, double kappa);

/// One noisy measurement at location x. Consumes exactly one standard normal
/// draw from rng in every case, including the coincident one, where the bearing
/// falls back to the first axis and the noise variance is zero.
Measurement measure(const Vec& x, const Vec& target, double kappa, Rng& rng);

}  // namespace mobnet
