#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace bergman::simd {

enum class Isa { scalar, avx2 };

std::string to_string(Isa isa);

/// Best ISA supported by the running CPU.
Isa detect_isa();
/// detect_isa(), unless BERGMAN_SIMD=scalar forces the reference path.
Isa active_isa();

/// Monte-Carlo moment integrand over samples t in (0,1)^n:
///   f(t) = 1[prod_{a<s} t_a^{p_a} < prod_{b>=s} t_b^{q_b}] * prod_a t_a^{e_a}
struct MomentParams {
  std::size_t n = 0;
  std::size_t s = 0;
  std::span<const std::int64_t> shadow_exps;     ///< |k_a|, length n
  std::span<const std::int64_t> integrand_exps;  ///< e_a (e.g. beta_a - 1), may be negative
};

struct MomentSums {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t accepted = 0;
};

/// Samples are structure-of-arrays: coordinate a of sample i is t[a * stride + i].
///
/// Both variants accumulate sample i into lane i % 4 and reduce the lanes as
/// (l0 + l1) + (l2 + l3), with identical operation order per sample, so their
/// results agree bit-for-bit.
MomentSums shadow_moments_scalar(const double* t, std::size_t stride, std::size_t count,
                                 const MomentParams& params);
MomentSums shadow_moments_avx2(const double* t, std::size_t stride, std::size_t count,
                               const MomentParams& params);

MomentSums shadow_moments(const double* t, std::size_t stride, std::size_t count,
                          const MomentParams& params, Isa isa);

}  // namespace bergman::simd
