#if defined(__aarch64__)

#include <arm_neon.h>

#include <cassert>

#include "mobnet/kernels.hpp"

namespace mobnet::detail {
namespace {

// vmulq + vaddq rather than vfmaq: the scalar reference never fuses.
void accumulate_sq(const double* c, double ref, double* acc, std::size_t n) {
  const float64x2_t r = vdupq_n_f64(ref);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(c + j), r);
    vst1q_f64(acc + j, vaddq_f64(vld1q_f64(acc + j), vmulq_f64(d, d)));
  }
  for (; j < n; ++j) {
    const double d = c[j] - ref;
    acc[j] = acc[j] + d * d;
  }
}

}  // namespace

void pairwise_sq_neon(const PointSet& points, std::span<double> out) {
  const std::size_t n = points.size();
  assert(out.size() == n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = 0.0;
    for (std::size_t a = 0; a < points.dim(); ++a) {
      const double* c = points.axis(a).data();
      accumulate_sq(c, c[i], row, n);
    }
  }
}

void sq_to_point_neon(const PointSet& points, const Vec& q, std::span<double> out) {
  const std::size_t n = points.size();
  assert(out.size() == n && q.dim() == points.dim());
  for (std::size_t j = 0; j < n; ++j) out[j] = 0.0;
  for (std::size_t a = 0; a < points.dim(); ++a) {
    accumulate_sq(points.axis(a).data(), q[a], out.data(), n);
  }
}

}  // namespace mobnet::detail

#endif
