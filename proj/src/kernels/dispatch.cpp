#include <cstdlib>
#include <stdexcept>
#include <string>

#include "mobnet/kernels.hpp"

namespace mobnet {
namespace {

constexpr DistanceKernels kScalar{&detail::pairwise_sq_scalar, &detail::sq_to_point_scalar};
#if defined(__x86_64__) || defined(_M_X64)
constexpr DistanceKernels kAvx2{&detail::pairwise_sq_avx2, &detail::sq_to_point_avx2};
#endif
#if defined(__aarch64__)
constexpr DistanceKernels kNeon{&detail::pairwise_sq_neon, &detail::sq_to_point_neon};
#endif

Isa detect() {
  Isa best = Isa::scalar;
  if (isa_available(Isa::avx2)) best = Isa::avx2;
  if (isa_available(Isa::neon)) best = Isa::neon;
  if (const char* env = std::getenv("MOBNET_ISA")) {
    const std::string want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == isa_name(isa) && isa_available(isa)) return isa;
    }
  }
  return best;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const DistanceKernels& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::avx2: return kAvx2;
#endif
#if defined(__aarch64__)
    case Isa::neon: return kNeon;
#endif
    default: return kScalar;
  }
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

}  // namespace mobnet
