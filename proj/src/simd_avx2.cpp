#include <immintrin.h>

#include "simd_common.hpp"

namespace bergman::simd {

namespace {

__m256d ipow_v(__m256d base, std::int64_t e) {
  const bool inv = e < 0;
  std::uint64_t u = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  __m256d result = _mm256_set1_pd(1.0);
  while (u) {
    if (u & 1) result = _mm256_mul_pd(result, base);
    u >>= 1;
    if (u) base = _mm256_mul_pd(base, base);
  }
  return inv ? _mm256_div_pd(_mm256_set1_pd(1.0), result) : result;
}

}  // namespace

MomentSums shadow_moments_avx2(const double* t, std::size_t stride, std::size_t count,
                               const MomentParams& params) {
  __m256d vsum = _mm256_setzero_pd(), vsq = _mm256_setzero_pd();
  std::uint64_t accepted = 0;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d lhs = _mm256_set1_pd(1.0), rhs = _mm256_set1_pd(1.0), w = _mm256_set1_pd(1.0);
    for (std::size_t a = 0; a < params.n; ++a) {
      const __m256d x = _mm256_loadu_pd(t + a * stride + i);
      if (a < params.s)
        lhs = _mm256_mul_pd(lhs, ipow_v(x, params.shadow_exps[a]));
      else
        rhs = _mm256_mul_pd(rhs, ipow_v(x, params.shadow_exps[a]));
      w = _mm256_mul_pd(w, ipow_v(x, params.integrand_exps[a]));
    }
    const __m256d mask = _mm256_cmp_pd(lhs, rhs, _CMP_LT_OQ);
    const __m256d v = _mm256_and_pd(mask, w);
    vsum = _mm256_add_pd(vsum, v);
    vsq = _mm256_add_pd(vsq, _mm256_mul_pd(v, v));
    accepted += static_cast<std::uint64_t>(__builtin_popcount(_mm256_movemask_pd(mask)));
  }
  alignas(32) double sum[4], sq[4];
  _mm256_store_pd(sum, vsum);
  _mm256_store_pd(sq, vsq);
  for (; i < count; ++i) {
    bool inside = false;
    const double v = detail::moment_sample(t, stride, i, params, inside);
    sum[i % 4] += v;
    sq[i % 4] += v * v;
    accepted += inside;
  }
  return detail::reduce_lanes(sum, sq, accepted);
}

}  // namespace bergman::simd
