#include "bergman/shadow_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "bergman/frac_exp_sum.hpp"

namespace bergman {

std::optional<Rational> shadow_integral_exact(const MultiIndex& beta, const DomainSpec& spec,
                                              const ShadowOptions& options) {
  const std::size_t n = spec.n;
  const std::size_t s = spec.s;
  if (beta.size() != n) throw std::invalid_argument("shadow_integral_exact: beta has wrong length");
  const MultiIndex k = spec.abs_k();

  std::vector<std::size_t> order = options.negative_order;
  if (order.empty()) {
    for (std::size_t b = s; b < n; ++b) order.push_back(b);
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != n - s || sorted[i] != s + i)
        throw std::invalid_argument("negative_order must permute the negative-exponent coordinates");
  }

  // Region: 0 < t < 1 and prod_{a<s} t_a^{k_a} < prod_{b>=s} t_b^{k_b}. With the positive
  // coordinates free on [0,1], the negative ones are nested: coordinate order[i] runs over
  //   ( P / prod_{r<i} t_{order[r]}^{k_{order[r]}} )^{1/k_{order[i]}} < t < 1,
  // and each such lower limit is < 1 whenever the enclosing limits hold.
  std::vector<IntegrationBound> lower(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Rational qi(to_integer(k[order[i]]));
    RationalExponent m(n, 0);
    for (std::size_t a = 0; a < s; ++a) m[a] = Rational(to_integer(k[a])) / qi;
    for (std::size_t r = 0; r < i; ++r) m[order[r]] = -Rational(to_integer(k[order[r]])) / qi;
    lower[i] = IntegrationBound::monomial(std::move(m));
  }

  RationalExponent integrand(n);
  for (std::size_t a = 0; a < n; ++a) integrand[a] = Rational(to_integer(beta[a] - 1));
  FracExpSum f = FracExpSum::monomial(integrand);
  const auto one = IntegrationBound::one(n);

  for (std::size_t i = order.size(); i-- > 0;) {
    auto next = integrate_one_var(f, order[i], lower[i], one);
    if (!next) return std::nullopt;
    f = std::move(*next);
  }
  for (std::size_t a = s; a-- > 0;) {
    auto next = integrate_one_var(f, a, IntegrationBound::zero(), one);
    if (!next) return std::nullopt;
    f = std::move(*next);
  }
  return f.constant_value();
}

NormValue monomial_norm_oracle(const MultiIndex& alpha, const DomainSpec& spec) {
  auto d = shadow_integral_exact(alpha.shifted(1), spec);
  if (!d) return NormValue::infinite();
  if (*d <= 0) throw std::logic_error("shadow integral of a positive integrand came out non-positive");
  return NormValue::finite(*d, static_cast<unsigned>(spec.n));
}

}  // namespace bergman
