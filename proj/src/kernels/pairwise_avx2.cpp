#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cassert>

#include "mobnet/kernels.hpp"

// Compiled without -mavx2; only the functions tagged below use AVX2, so the
// rest of the binary still runs on baseline x86-64.
#define MOBNET_AVX2 __attribute__((target("avx2")))

namespace mobnet::detail {
namespace {

// acc[j] += (c[j] - ref)^2 for j in [0, n), four lanes at a time.
MOBNET_AVX2 void accumulate_sq(const double* c, double ref, double* acc, std::size_t n) {
  const __m256d r = _mm256_set1_pd(ref);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(c + j), r);
    const __m256d sq = _mm256_mul_pd(d, d);
    _mm256_storeu_pd(acc + j, _mm256_add_pd(_mm256_loadu_pd(acc + j), sq));
  }
  for (; j < n; ++j) {
    const double d = c[j] - ref;
    acc[j] = acc[j] + d * d;
  }
}

MOBNET_AVX2 void zero(double* acc, std::size_t n) {
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) _mm256_storeu_pd(acc + j, _mm256_setzero_pd());
  for (; j < n; ++j) acc[j] = 0.0;
}

}  // namespace

MOBNET_AVX2 void pairwise_sq_avx2(const PointSet& points, std::span<double> out) {
  const std::size_t n = points.size();
  assert(out.size() == n * n);
  for (std::size_t i = 0; i < n; ++i) {
    double* row = out.data() + i * n;
    zero(row, n);
    for (std::size_t a = 0; a < points.dim(); ++a) {
      const double* c = points.axis(a).data();
      accumulate_sq(c, c[i], row, n);
    }
  }
}

MOBNET_AVX2 void sq_to_point_avx2(const PointSet& points, const Vec& q, std::span<double> out) {
  const std::size_t n = points.size();
  assert(out.size() == n && q.dim() == points.dim());
  zero(out.data(), n);
  for (std::size_t a = 0; a < points.dim(); ++a) {
    accumulate_sq(points.axis(a).data(), q[a], out.data(), n);
  }
}

}  // namespace mobnet::detail

#endif
