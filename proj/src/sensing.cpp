#include "mobnet/sensing.hpp"

#include <cmath>

namespace mobnet {

Rng make_substream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6d6f626eU};
  return Rng(seq);
}

double noise_variance(const Vec& x, const Vec& target, double kappa) {
  return kappa * squared_distance(x, target);
}

Measurement measure(const Vec& x, const Vec& target, double kappa, Rng& rng) {
  std::normal_distribution<double> standard(0.0, 1.0);
  const double z = standard(rng);

  auto bearing = direction_toward(x, target);
  if (!bearing) {
    const Direction u = Direction::first_axis(x.dim());
    return Measurement{u, dot(u, target), 0.0};
  }
  const double sigma2 = noise_variance(x, target, kappa);
  return Measurement{*bearing, dot(*bearing, target) + std::sqrt(sigma2) * z, sigma2};
}

}  // namespace mobnet
