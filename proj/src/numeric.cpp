#include "bergman/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "bergman/kernel.hpp"
#include "bergman/shadow_oracle.hpp"

namespace bergman {

unsigned thread_count() {
  if (const char* env = std::getenv("BERGMAN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Runs fn(block) for block in [0, blocks) on the worker pool.
template <class Fn>
void parallel_blocks(std::uint64_t blocks, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) fn(b);
    });
  for (auto& th : pool) th.join();
}

template <class T, class Add>
T pairwise_sum(std::span<const T> xs, Add add) {
  if (xs.size() == 1) return xs[0];
  const std::size_t half = xs.size() / 2;
  return add(pairwise_sum(xs.subspan(0, half), add), pairwise_sum(xs.subspan(half), add));
}

simd::MomentSums add_moments(const simd::MomentSums& a, const simd::MomentSums& b) {
  return {a.sum + b.sum, a.sum_sq + b.sum_sq, a.accepted + b.accepted};
}

struct MomentSetup {
  std::vector<std::int64_t> shadow, integrand;
  simd::MomentParams params;
};

MomentSetup moment_setup(const MultiIndex& alpha, const DomainSpec& spec) {
  if (alpha.size() != spec.n) throw std::invalid_argument("dimension mismatch between alpha and k");
  MomentSetup m;
  m.shadow = spec.abs_k().vec();
  m.integrand = alpha.vec();  // beta - 1
  m.params = {spec.n, spec.s, m.shadow, m.integrand};
  return m;
}

// Moment sums of block `block` holding `count` samples.
simd::MomentSums moment_block(const simd::MomentParams& params, std::uint64_t seed, std::uint64_t block,
                              std::size_t count, simd::Isa isa) {
  std::mt19937_64 rng(stream_seed(seed, block));
  std::vector<double> t(params.n * count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t a = 0; a < params.n; ++a) t[a * count + i] = unit_open(rng());
  return simd::shadow_moments(t.data(), count, count, params, isa);
}

std::vector<simd::MomentSums> moment_blocks(const simd::MomentParams& params, std::uint64_t samples,
                                            std::uint64_t seed, simd::Isa isa) {
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<simd::MomentSums> out(blocks);
  parallel_blocks(blocks, [&](std::uint64_t b) {
    const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
    out[b] = moment_block(params, seed, b, static_cast<std::size_t>(count), isa);
  });
  return out;
}

std::complex<double> cpow(std::complex<double> base, std::int64_t e) {
  const bool inv = e < 0;
  std::uint64_t u = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  std::complex<double> result = 1.0;
  while (u) {
    if (u & 1) result *= base;
    u >>= 1;
    if (u) base *= base;
  }
  return inv ? 1.0 / result : result;
}

double pi_pow(std::size_t n) { return std::pow(std::numbers::pi, static_cast<double>(n)); }

}  // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

McEstimate mc_norm_estimate(const MultiIndex& alpha, const DomainSpec& spec, std::uint64_t samples,
                            std::uint64_t seed, simd::Isa isa) {
  if (samples < 10000) throw std::invalid_argument("mc_norm_estimate: need at least 10^4 samples");
  const MomentSetup setup = moment_setup(alpha, spec);
  const auto blocks = moment_blocks(setup.params, samples, seed, isa);
  const auto total = pairwise_sum<simd::MomentSums>(blocks, add_moments);
  if (total.accepted == 0) throw std::runtime_error("mc_norm_estimate: no sample landed in the shadow");
  const double N = static_cast<double>(samples);
  const double mean = total.sum / N;
  const double var = std::max(0.0, total.sum_sq / N - mean * mean);
  const double scale = pi_pow(spec.n);
  return {scale * mean, scale * std::sqrt(var / N), samples, total.accepted};
}

DivergenceReport mc_divergence_test(const MultiIndex& alpha, const DomainSpec& spec, std::uint64_t base_samples,
                                    std::uint64_t seed) {
  constexpr int kLevels = 6;
  constexpr std::uint64_t kGroups = 8;
  const MomentSetup setup = moment_setup(alpha, spec);
  const std::uint64_t base_blocks = std::max<std::uint64_t>(kGroups, (base_samples + kSampleBlock - 1) / kSampleBlock);
  const std::uint64_t max_blocks = base_blocks << (kLevels - 1);
  const auto blocks = moment_blocks(setup.params, max_blocks * kSampleBlock, seed, simd::active_isa());

  DivergenceReport report;
  for (int level = 0; level < kLevels; ++level) {
    const std::uint64_t used = base_blocks << level;
    const std::uint64_t per_group = used / kGroups;
    std::vector<double> means;
    for (std::uint64_t g = 0; g < kGroups; ++g) {
      double s = 0.0;
      for (std::uint64_t b = g * per_group; b < (g + 1) * per_group; ++b) s += blocks[b].sum;
      means.push_back(s / static_cast<double>(per_group * kSampleBlock));
    }
    std::sort(means.begin(), means.end());
    report.estimates.push_back(pi_pow(spec.n) * 0.5 * (means[kGroups / 2 - 1] + means[kGroups / 2]));
  }
  int rising = 0;
  for (int level = 1; level < kLevels; ++level) rising += report.estimates[level] > report.estimates[level - 1];
  const double first = report.estimates.front(), last = report.estimates.back();
  report.divergent = rising >= kLevels - 2 && last > 1.1 * first;
  return report;
}

ReproducingResult check_reproducing(const RationalKernel& kernel, const DomainSpec& spec, const MultiIndex& alpha,
                                    std::span<const std::complex<double>> z, std::uint64_t samples,
                                    std::uint64_t seed) {
  using cd = std::complex<double>;
  const std::size_t n = spec.n;
  if (alpha.size() != n || z.size() != n || kernel.dim() != n)
    throw std::invalid_argument("check_reproducing: dimension mismatch");
  if (!shadow_integral_exact(alpha.shifted(1), spec))
    throw std::invalid_argument("check_reproducing: e_alpha is not square integrable on the domain");
  if (samples == 0) throw std::invalid_argument("check_reproducing: need at least one sample");

  struct Partial {
    cd sum = 0.0;
    double sq = 0.0;
    std::uint64_t accepted = 0, singular = 0;
  };
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<Partial> parts(blocks);
  parallel_blocks(blocks, [&](std::uint64_t b) {
    std::mt19937_64 rng(stream_seed(seed, b));
    const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
    std::vector<double> t(n);
    std::vector<cd> w(n);
    Partial& p = parts[b];
    for (std::uint64_t i = 0; i < count; ++i) {
      for (std::size_t a = 0; a < n; ++a) t[a] = unit_open(rng());
      for (std::size_t a = 0; a < n; ++a) {
        const double theta = 2.0 * std::numbers::pi * unit_open(rng());
        w[a] = std::polar(std::sqrt(t[a]), theta);
      }
      if (!shadow_contains(t, spec)) continue;
      ++p.accepted;
      cd f = 1.0;
      for (std::size_t a = 0; a < n; ++a) f *= cpow(w[a], alpha[a]);
      try {
        const cd v = f * evaluate_kernel(kernel, z, w);
        p.sum += v;
        p.sq += std::norm(v);
      } catch (const SingularEvaluation&) {
        ++p.singular;
      }
    }
  });
  Partial total = pairwise_sum<Partial>(parts, [](const Partial& a, const Partial& b) {
    return Partial{a.sum + b.sum, a.sq + b.sq, a.accepted + b.accepted, a.singular + b.singular};
  });

  // w = sqrt(t) e^{i theta}: dV = prod (1/2) dt dtheta, volume of the sampled set pi^n
  const double N = static_cast<double>(samples);
  const double scale = pi_pow(n);
  ReproducingResult r;
  const cd mean = total.sum / N;
  r.estimate = scale * mean;
  r.std_error = scale * std::sqrt(std::max(0.0, total.sq / N - std::norm(mean)) / N);
  r.exact = 1.0;
  for (std::size_t a = 0; a < n; ++a) r.exact *= cpow(z[a], alpha[a]);
  const double diff = std::abs(r.estimate - r.exact);
  r.relative_error = std::abs(r.exact) > 0.0 ? diff / std::abs(r.exact) : diff;
  r.samples = samples;
  r.accepted = total.accepted;
  r.discarded_singular = total.singular;
  return r;
}

double check_bell_identity(const DomainSpec& spec, std::span<const std::complex<double>> z,
                           std::span<const std::complex<double>> w) {
  using cd = std::complex<double>;
  const std::size_t n = spec.n;
  if (spec.s != 1) throw DomainError("check_bell_identity: signature must be 1");
  if (z.size() != n || w.size() != n) throw std::invalid_argument("check_bell_identity: dimension mismatch");
  for (const auto& wa : w)
    if (wa == 0.0) throw std::invalid_argument("check_bell_identity: w lies on the critical locus");

  static thread_local std::vector<std::pair<DomainSpec, RationalKernel>> cache;
  const RationalKernel* kh = nullptr;
  for (const auto& [s, k] : cache)
    if (s == spec) kh = &k;
  if (!kh) {
    cache.emplace_back(spec, kernel_signature_one(spec));
    kh = &cache.back().second;
  }
  const RationalKernel ko = kernel_model_sig1(n);

  std::vector<std::int64_t> ell(n);
  for (std::size_t a = 0; a < n; ++a) ell[a] = spec.ell[a];

  std::vector<cd> phi(n);
  cd u = 1.0;
  for (std::size_t a = 0; a < n; ++a) {
    phi[a] = cpow(z[a], ell[a]);
    u *= static_cast<double>(ell[a]) * cpow(z[a], ell[a] - 1);
  }
  const cd lhs = u * evaluate_kernel(*kh, phi, w);

  // principal root w^{1/ell}, argument in (-pi, pi]
  std::vector<cd> root(n), ufac(n);
  for (std::size_t a = 0; a < n; ++a) {
    const double l = static_cast<double>(ell[a]);
    root[a] = std::polar(std::pow(std::abs(w[a]), 1.0 / l), std::arg(w[a]) / l);
    ufac[a] = root[a] / (w[a] * l);  // w^{1/ell - 1} / ell
  }
  cd rhs = 0.0;
  std::vector<std::int64_t> j(n, 0);
  std::vector<cd> Phi(n);
  while (true) {
    cd U = 1.0;
    for (std::size_t a = 0; a < n; ++a) {
      const cd zeta = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j[a]) / static_cast<double>(ell[a]));
      Phi[a] = zeta * root[a];
      U *= zeta * ufac[a];
    }
    rhs += evaluate_kernel(ko, z, Phi) * std::conj(U);
    std::size_t a = 0;
    while (a < n && ++j[a] == ell[a]) j[a++] = 0;
    if (a == n) break;
  }
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs));
}

std::vector<std::complex<double>> random_domain_point(const DomainSpec& spec, std::mt19937_64& rng, double margin) {
  const std::size_t n = spec.n;
  const auto k = spec.abs_k();
  std::uniform_real_distribution<double> modulus(margin, 1.0 - margin), phase(-std::numbers::pi, std::numbers::pi);
  std::vector<double> r(n);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    for (auto& x : r) x = modulus(rng);
    double lhs = 1.0, rhs = 1.0;
    for (std::size_t a = 0; a < n; ++a)
      (a < spec.s ? lhs : rhs) *= std::pow(r[a], static_cast<double>(k[a]));
    if (lhs < (1.0 - margin) * rhs && std::all_of(r.begin(), r.end(), [](double x) { return x > 0.0; })) {
      std::vector<std::complex<double>> z(n);
      for (std::size_t a = 0; a < n; ++a) z[a] = std::polar(r[a], phase(rng));
      return z;
    }
  }
  throw std::runtime_error("random_domain_point: rejection sampling failed");
}

}  // namespace bergman
