#pragma once

#include <cstdint>

#include "bergman/simd_kernels.hpp"

namespace bergman::simd::detail {
namespace {

inline double ipow_d(double base, std::int64_t e) {
  const bool inv = e < 0;
  std::uint64_t u = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  double result = 1.0;
  while (u) {
    if (u & 1) result *= base;
    u >>= 1;
    if (u) base *= base;
  }
  return inv ? 1.0 / result : result;
}

// Value of the masked integrand at one sample (0.0 outside the shadow).
inline double moment_sample(const double* t, std::size_t stride, std::size_t i, const MomentParams& p,
                            bool& inside) {
  double lhs = 1.0, rhs = 1.0, w = 1.0;
  for (std::size_t a = 0; a < p.n; ++a) {
    const double x = t[a * stride + i];
    if (a < p.s)
      lhs *= ipow_d(x, p.shadow_exps[a]);
    else
      rhs *= ipow_d(x, p.shadow_exps[a]);
    w *= ipow_d(x, p.integrand_exps[a]);
  }
  inside = lhs < rhs;
  return inside ? w : 0.0;
}

inline MomentSums reduce_lanes(const double* sum, const double* sq, std::uint64_t accepted) {
  MomentSums out;
  out.sum = (sum[0] + sum[1]) + (sum[2] + sum[3]);
  out.sum_sq = (sq[0] + sq[1]) + (sq[2] + sq[3]);
  out.accepted = accepted;
  return out;
}

}  // namespace
}  // namespace bergman::simd::detail
