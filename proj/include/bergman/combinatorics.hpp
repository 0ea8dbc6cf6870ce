#pragma once

#include <cstdint>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/multi_index.hpp"
#include "bergman/rational.hpp"

namespace bergman {

/// D_lambda(mu): number of integer pairs 0 <= x, y <= lambda-1 with x + y = mu.
/// Total in mu; zero outside 0 <= mu <= 2*lambda-2. Requires lambda >= 1.
std::int64_t count_pairs(std::int64_t lambda, std::int64_t mu);

/// Enumerating reference for count_pairs.
std::int64_t count_pairs_bruteforce(std::int64_t lambda, std::int64_t mu);

/// Numerator coefficient C(beta) of the signature-one kernel.
Integer coefficient_C(const MultiIndex& beta, const DomainSpec& spec);

enum class IndexSetVariant { G, G_star };

struct IndexSetG {
  DomainSpec spec;
  IndexSetVariant variant = IndexSetVariant::G;
  std::vector<MultiIndex> members;  ///< lexicographic order

  bool contains(const MultiIndex& beta) const;
};

/// G:  0 <= beta_1 <= 2k_1-2,  0 <= beta_b <= 2k_b.
/// G*: same on beta_1; for b >= 2, 0 <= beta_b <= 2k_b when ell_b != 1 and
///     1 <= beta_b <= 2k_b - 1 when ell_b == 1. G* is contained in G, and C
///     vanishes on the difference.
IndexSetG index_set(const DomainSpec& spec, IndexSetVariant variant);

}  // namespace bergman
