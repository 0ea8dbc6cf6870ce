#include <cstdlib>
#include <string_view>

#include "simd_common.hpp"

namespace bergman::simd {

std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detect_isa() {
#if defined(BERGMAN_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa active_isa() {
  const char* forced = std::getenv("BERGMAN_SIMD");
  if (forced && std::string_view(forced) == "scalar") return Isa::scalar;
  return detect_isa();
}

MomentSums shadow_moments_scalar(const double* t, std::size_t stride, std::size_t count,
                                 const MomentParams& params) {
  double sum[4] = {0, 0, 0, 0}, sq[4] = {0, 0, 0, 0};
  std::uint64_t accepted = 0;
  for (std::size_t i = 0; i < count; ++i) {
    bool inside = false;
    const double v = detail::moment_sample(t, stride, i, params, inside);
    sum[i % 4] += v;
    sq[i % 4] += v * v;
    accepted += inside;
  }
  return detail::reduce_lanes(sum, sq, accepted);
}

#ifndef BERGMAN_HAVE_AVX2
MomentSums shadow_moments_avx2(const double* t, std::size_t stride, std::size_t count,
                               const MomentParams& params) {
  return shadow_moments_scalar(t, stride, count, params);
}
#endif

MomentSums shadow_moments(const double* t, std::size_t stride, std::size_t count, const MomentParams& params,
                          Isa isa) {
  if (isa == Isa::avx2 && detect_isa() == Isa::avx2) return shadow_moments_avx2(t, stride, count, params);
  return shadow_moments_scalar(t, stride, count, params);
}

}  // namespace bergman::simd
