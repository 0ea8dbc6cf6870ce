#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/kernel.hpp"
#include "bergman/multi_index.hpp"
#include "bergman/simd_kernels.hpp"

namespace bergman {

/// Worker threads for sampling: BERGMAN_THREADS if set, else hardware concurrency.
unsigned thread_count();

/// Seed of sampling block `index` under master `seed` (SplitMix64 finalizer of both).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform double in (0, 1) from a 64-bit draw: (x >> 12) + 0.5 scaled by 2^-52.
inline double unit_open(std::uint64_t x) {
  return (static_cast<double>(x >> 12) + 0.5) * 0x1.0p-52;
}

/// Samples are drawn in fixed blocks of this size, each from its own
/// mt19937_64 stream seeded with stream_seed(seed, block), so results do not
/// depend on the thread count.
inline constexpr std::uint64_t kSampleBlock = 1u << 16;

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
};

/// pi^n * E[1_shadow(t) t^{beta-1}] over t uniform in the unit cube.
///
/// With z_a = sqrt(t_a) e^{i theta_a}, dV(z) = prod (1/2) dt_a dtheta_a, so
/// ||e_alpha||^2 = (2 pi)^n 2^{-n} int_shadow t^{beta-1} dt = pi^n int_shadow t^{beta-1} dt,
/// and the cube integral equals the plain sample mean (cube volume one).
/// Throws std::invalid_argument for samples < 10^4, std::runtime_error if no
/// sample lands in the shadow.
McEstimate mc_norm_estimate(const MultiIndex& alpha, const DomainSpec& spec, std::uint64_t samples,
                            std::uint64_t seed, simd::Isa isa = simd::active_isa());

struct DivergenceReport {
  bool divergent = false;
  std::vector<double> estimates;  ///< median-of-block-means at base, 2 base, 4 base, ...
};

/// Doubling test: an infinite norm shows up as a median-of-means estimate
/// that keeps rising as the sample count doubles.
DivergenceReport mc_divergence_test(const MultiIndex& alpha, const DomainSpec& spec,
                                    std::uint64_t base_samples, std::uint64_t seed);

struct ReproducingResult {
  double relative_error = 0.0;   ///< |estimate - f(z)| / |f(z)| (absolute when f(z) = 0)
  std::complex<double> estimate;
  std::complex<double> exact;
  double std_error = 0.0;        ///< of |estimate|
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::uint64_t discarded_singular = 0;
};

/// Monte-Carlo check of f(z) = int f(w) K(z, w) dV(w) for f = e_alpha.
/// Throws std::invalid_argument when e_alpha is not square integrable.
ReproducingResult check_reproducing(const RationalKernel& kernel, const DomainSpec& spec,
                                    const MultiIndex& alpha,
                                    std::span<const std::complex<double>> z, std::uint64_t samples,
                                    std::uint64_t seed);

/// Relative residual |LHS - RHS| / (|LHS| + |RHS|) of the transformation
/// formula under the standard proper map phi: Omega_{n,1} -> H(k):
///   u(z) K_H(phi(z), w) = sum_j K_Omega(z, Phi_j(w)) conj(U_j(w)).
/// z lies in Omega_{n,1}, w in H(k) with no zero coordinate.
double check_bell_identity(const DomainSpec& spec, std::span<const std::complex<double>> z,
                           std::span<const std::complex<double>> w);

/// Random point of the domain: moduli by rejection from the shadow, each in
/// (margin, 1 - margin) and with |z^k| < 1 - margin, phases uniform.
std::vector<std::complex<double>> random_domain_point(const DomainSpec& spec, std::mt19937_64& rng,
                                                      double margin = 0.0);

}  // namespace bergman
