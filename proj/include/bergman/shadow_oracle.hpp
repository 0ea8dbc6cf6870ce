#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/multi_index.hpp"
#include "bergman/norm_value.hpp"
#include "bergman/rational.hpp"

namespace bergman {

struct ShadowOptions {
  /// Nesting order of the negative-exponent coordinates, outermost first.
  /// Empty means s, s+1, ..., n-1 (0-based).
  std::vector<std::size_t> negative_order;
};

/// Exact value of int_{shadow} t^{beta-1} dt by symbolic iterated
/// integration; nullopt when the integral diverges.
std::optional<Rational> shadow_integral_exact(const MultiIndex& beta, const DomainSpec& spec,
                                              const ShadowOptions& options = {});

/// pi^n * shadow_integral_exact(alpha + 1).
NormValue monomial_norm_oracle(const MultiIndex& alpha, const DomainSpec& spec);

}  // namespace bergman
