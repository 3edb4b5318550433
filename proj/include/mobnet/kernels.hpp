#pragma once

// Data-parallel distance kernels over a structure-of-arrays point set.
//
// Every ISA variant performs exactly the same IEEE operations in the same
// order as the scalar reference (subtract, square, accumulate axis by axis,
// no fused multiply-add), so results are bit-identical across variants. The
// neighbor rules compare distances against thresholds, and a single ulp of
// disagreement would change the graph and therefore every later iterate.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mobnet/vec.hpp"

namespace mobnet {

/// Points stored axis-major: coords[axis * size() + i].
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t count, std::size_t dim) : n_(count), dim_(dim), coords_(count * dim) {}

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }

  void set(std::size_t i, const Vec& p) {
    for (std::size_t a = 0; a < dim_; ++a) coords_[a * n_ + i] = p[a];
  }
  Vec get(std::size_t i) const {
    Vec p(dim_);
    for (std::size_t a = 0; a < dim_; ++a) p[a] = coords_[a * n_ + i];
    return p;
  }

  std::span<const double> axis(std::size_t a) const { return {coords_.data() + a * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct DistanceKernels {
  /// out[i * n + j] = |p_j - p_i|^2, out.size() == n * n.
  void (*pairwise_sq)(const PointSet& points, std::span<double> out);
  /// out[i] = |p_i - q|^2, out.size() == n.
  void (*sq_to_point)(const PointSet& points, const Vec& q, std::span<double> out);
};

/// True when the running CPU can execute the given variant.
bool isa_available(Isa isa);

/// Kernel table for one variant; the variant must be available.
const DistanceKernels& kernels_for(Isa isa);

/// Best available variant, chosen once per process. The environment variable
/// MOBNET_ISA=scalar|avx2|neon overrides it when that variant is available.
Isa active_isa();

inline const DistanceKernels& kernels() { return kernels_for(active_isa()); }

namespace detail {
void pairwise_sq_scalar(const PointSet& points, std::span<double> out);
void sq_to_point_scalar(const PointSet& points, const Vec& q, std::span<double> out);
#if defined(__x86_64__) || defined(_M_X64)
void pairwise_sq_avx2(const PointSet& points, std::span<double> out);
void sq_to_point_avx2(const PointSet& points, const Vec& q, std::span<double> out);
#endif
#if defined(__aarch64__)
void pairwise_sq_neon(const PointSet& points, std::span<double> out);
void sq_to_point_neon(const PointSet& points, const Vec& q, std::span<double> out);
#endif
}  // namespace detail

}  // namespace mobnet
