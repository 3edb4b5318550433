#include <cassert>

#include "mobnet/kernels.hpp"

namespace mobnet::detail {

void pairwise_sq_scalar(const PointSet& points, std::span<double> out) {
  const std::size_t n = points.size();
  assert(out.size() == n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = 0.0;
    for (std::size_t a = 0; a < points.dim(); ++a) {
      const double* c = points.axis(a).data();
      const double ci = c[i];
      for (std::size_t j = 0; j < n; ++j) {
        const double d = c[j] - ci;
        row[j] = row[j] + d * d;
      }
    }
  }
}

void sq_to_point_scalar(const PointSet& points, const Vec& q, std::span<double> out) {
  const std::size_t n = points.size();
  assert(out.size() == n && q.dim() == points.dim());
  for (std::size_t j = 0; j < n; ++j) out[j] = 0.0;
  for (std::size_t a = 0; a < points.dim(); ++a) {
    const double* c = points.axis(a).data();
    const double qa = q[a];
    for (std::size_t j = 0; j < n; ++j) {
      const double d = c[j] - qa;
      out[j] = out[j] + d * d;
    }
  }
}

}  // namespace mobnet::detail
