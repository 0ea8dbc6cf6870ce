#pragma once

#include <cstddef>
#include <memory>

#include "bergman/multi_index.hpp"
#include "bergman/norm_value.hpp"
#include "bergman/rational.hpp"
#include "bergman/sparse_poly.hpp"

namespace bergman {

/// Norm polynomials of the model domain Omega_{n,s}:
///   ||e_alpha||^2 = pi^n R(beta) / S(beta),  beta = alpha + 1.
struct RSPair {
  std::size_t n = 0;
  std::size_t s = 0;
  SparsePoly R;
  SparsePoly S;
};

/// beta* of the induction step: (beta_j + b) for j < s, (beta_j - b) for j >= s (0-based).
MultiIndex beta_star(const MultiIndex& beta, std::int64_t b, std::size_t s);

/// Same substitution as polynomials over n+1 variables, the last being beta_{n+1}.
SparsePoly beta_star_substitute(const SparsePoly& p, std::size_t n, std::size_t s);

bool is_norm_finite(const MultiIndex& alpha, std::size_t n, std::size_t s);

/// prod_{j<=s} beta_j * prod_{j<=s<l} (beta_j + beta_l).
SparsePoly build_S(std::size_t n, std::size_t s);

/// Runs the R recursion from R_{s,s} = 1 up to R_{n,s}. Requires 1 <= s <= n.
/// Throws std::logic_error if an intermediate division by beta_{m+1} is not exact.
RSPair build_RS_uncached(std::size_t n, std::size_t s);

/// Memoized build_RS_uncached; safe for concurrent callers.
std::shared_ptr<const RSPair> build_RS(std::size_t n, std::size_t s);

/// D_{n,s}(beta) = R(beta)/S(beta), the norm divided by pi^n. Requires a finite norm.
Rational model_D(const MultiIndex& beta, std::size_t s);

NormValue monomial_norm_model(const MultiIndex& alpha, std::size_t n, std::size_t s);

}  // namespace bergman
