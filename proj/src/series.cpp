#include "bergman/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bergman/monomial_norms.hpp"
#include "bergman/shadow_oracle.hpp"

namespace bergman {

LaurentChunk series_coefficients_model(std::size_t n, std::size_t s, const Box& box) {
  if (box.dim() != n) throw std::invalid_argument("series_coefficients_model: box dimension mismatch");
  LaurentChunk chunk(box, static_cast<unsigned>(n));
  box.for_each([&](const MultiIndex& alpha) {
    if (is_norm_finite(alpha, n, s)) chunk.add(alpha, 1 / model_D(alpha.shifted(1), s));
  });
  return chunk;
}

LaurentChunk series_coefficients_oracle(const DomainSpec& spec, const Box& box) {
  if (box.dim() != spec.n) throw std::invalid_argument("series_coefficients_oracle: box dimension mismatch");
  LaurentChunk chunk(box, static_cast<unsigned>(spec.n));
  box.for_each([&](const MultiIndex& alpha) {
    auto d = shadow_integral_exact(alpha.shifted(1), spec);
    if (d) chunk.add(alpha, 1 / *d);
  });
  return chunk;
}

namespace {

// binom(p + mult - 1, mult - 1): coefficient of x^p in (1 - x)^{-mult}
Rational unit_series_coefficient(std::int64_t p, unsigned mult) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(p + mult - 1), mult - 1);
  return Rational(c);
}

}  // namespace

LaurentChunk expand_closed_form(const RationalKernel& kernel, const Box& box) {
  const std::size_t n = kernel.dim();
  if (box.dim() != n) throw std::invalid_argument("expand_closed_form: box dimension mismatch");
  const std::int64_t k1 = kernel.denom_main.k1;
  if (k1 < 1) throw std::invalid_argument("expand_closed_form: k1 must be positive");

  std::vector<unsigned> mult(n, 0);
  for (const auto& u : kernel.denom_units) mult.at(u.var) += u.multiplicity;

  LaurentChunk chunk(box, kernel.pi_power);
  const Rational pre = kernel.prefactor();
  std::vector<std::int64_t> base(n), alpha(n);

  for (const auto& [beta, c] : kernel.numerator.terms()) {
    for (std::int64_t m = 0; beta[0] + k1 * m <= box.hi[0]; ++m) {
      base[0] = beta[0] + k1 * m;
      for (std::size_t b = 1; b < n; ++b) base[b] = beta[b] - kernel.denom_main.kb[b - 1] * (m + 2);
      const Rational head = pre * c * Rational(to_integer(m + 1));

      // odometer over the unit-factor exponents p_a = alpha_a - base_a >= 0
      std::vector<std::int64_t> lo(n), hi(n);
      bool empty = false;
      for (std::size_t a = 0; a < n; ++a) {
        if (mult[a] == 0) {
          lo[a] = hi[a] = base[a];
          if (base[a] < box.lo[a] || base[a] > box.hi[a]) empty = true;
        } else {
          lo[a] = std::max(base[a], box.lo[a]);
          hi[a] = box.hi[a];
          if (lo[a] > hi[a]) empty = true;
        }
      }
      if (empty) continue;
      alpha = lo;
      while (true) {
        Rational coef = head;
        for (std::size_t a = 0; a < n; ++a)
          if (mult[a] != 0) coef *= unit_series_coefficient(alpha[a] - base[a], mult[a]);
        chunk.add(MultiIndex(alpha), coef);
        std::size_t a = n;
        while (a > 0) {
          --a;
          if (alpha[a] < hi[a]) {
            ++alpha[a];
            break;
          }
          alpha[a] = lo[a];
          if (a == 0) goto done;
        }
      }
    done:;
    }
  }
  return chunk;
}

std::vector<Rational> slice_coefficients(std::size_t n, std::size_t count) {
  if (n < 3) throw std::invalid_argument("slice_coefficients: n must be at least 3");
  if (count < 1) throw std::invalid_argument("slice_coefficients: count must be at least 1");
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    Integer p = pow(Integer(static_cast<unsigned long>(k + 1)), static_cast<std::uint64_t>(n - 1));
    out.emplace_back(Integer(static_cast<unsigned long>(k)), p - 1);
    out.back().canonicalize();
  }
  return out;
}

std::string to_string(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::polynomial_decay: return "polynomial_decay";
    case DecayVerdict::exponential_decay: return "exponential_decay";
    case DecayVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DecayVerdict rationality_diagnostic(std::span<const Rational> coeffs, const DiagnosticThresholds& thr) {
  if (coeffs.size() < 20) throw std::invalid_argument("rationality_diagnostic: need at least 20 coefficients");
  for (const auto& c : coeffs)
    if (sgn(c) <= 0) throw std::invalid_argument("rationality_diagnostic: coefficients must be positive");

  // r[k] = a_{k+1} / a_k with a 1-based, over the tail k >= N/2
  const std::size_t N = coeffs.size();
  const std::size_t first = N / 2;
  std::vector<double> ratio, growth;
  bool within_window = true;
  for (std::size_t k = first; k < N; ++k) {
    Rational q = coeffs[k] / coeffs[k - 1];
    const double r = q.get_d();
    const double kk = static_cast<double>(k);
    ratio.push_back(r);
    growth.push_back(kk * std::abs(1.0 - r));
    if (!(std::abs(r - 1.0) < thr.window / kk)) within_window = false;
  }

  if (within_window) {
    const double g0 = std::max(growth.front(), 1e-300);
    const double gmax = *std::max_element(growth.begin(), growth.end());
    if (gmax <= thr.trend_slack * g0 || gmax < 1e-12) return DecayVerdict::polynomial_decay;
  }
  const auto [rmin, rmax] = std::minmax_element(ratio.begin(), ratio.end());
  if (*rmax < 1.0 - thr.delta && *rmax - *rmin < thr.spread) return DecayVerdict::exponential_decay;
  return DecayVerdict::inconclusive;
}

LaurentChunk apply_annihilating_operator(std::size_t n, std::size_t s, const LaurentChunk& chunk) {
  if (chunk.box().dim() != n) throw std::invalid_argument("apply_annihilating_operator: box dimension mismatch");
  const auto rs = build_RS(n, s);
  LaurentChunk out(chunk.box().shifted(1), chunk.pi_power());
  std::vector<Rational> point(n);
  for (const auto& [alpha, c] : chunk.terms()) {
    MultiIndex beta = alpha.shifted(1);
    for (std::size_t a = 0; a < n; ++a) point[a] = Rational(to_integer(beta[a]));
    out.add(beta, c * rs->R.evaluate(point));
  }
  return out;
}

}  // namespace bergman
