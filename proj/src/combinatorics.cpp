#include "bergman/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "bergman/checked.hpp"
#include "bergman/laurent_chunk.hpp"

namespace bergman {

std::int64_t count_pairs(std::int64_t lambda, std::int64_t mu) {
  if (lambda < 1) throw std::invalid_argument("count_pairs: lambda must be positive");
  if (mu <= -1 || mu >= 2 * lambda - 1) return 0;
  if (mu <= lambda - 1) return mu + 1;
  return 2 * lambda - 1 - mu;
}

std::int64_t count_pairs_bruteforce(std::int64_t lambda, std::int64_t mu) {
  if (lambda < 1) throw std::invalid_argument("count_pairs_bruteforce: lambda must be positive");
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < lambda; ++x)
    for (std::int64_t y = 0; y < lambda; ++y)
      if (x + y == mu) ++count;
  return count;
}

namespace {

void require_signature_one(const DomainSpec& spec, const char* what) {
  if (spec.s != 1) throw DomainError(std::string(what) + ": requires a signature-one domain");
}

}  // namespace

Integer coefficient_C(const MultiIndex& beta, const DomainSpec& spec) {
  require_signature_one(spec, "coefficient_C");
  if (beta.size() != spec.n) throw std::invalid_argument("coefficient_C: beta has wrong length");
  using namespace checked;
  const std::int64_t K = to_int64(spec.K);
  const std::int64_t first = mul(spec.ell[0], add(beta[0], 1));  // ell_1 (beta_1 + 1)
  Integer c = to_integer(count_pairs(K, sub(sub(mul(2, K), first), 1)));
  for (std::size_t b = 1; b < spec.n && c != 0; ++b) {
    const std::int64_t mu = sub(sub(add(mul(spec.ell[b], add(beta[b], 1)), first), mul(2, K)), 1);
    c *= to_integer(count_pairs(spec.ell[b], mu));
  }
  return c;
}

bool IndexSetG::contains(const MultiIndex& beta) const {
  return std::binary_search(members.begin(), members.end(), beta);
}

IndexSetG index_set(const DomainSpec& spec, IndexSetVariant variant) {
  require_signature_one(spec, "index_set");
  const auto k = spec.abs_k();
  std::vector<std::int64_t> lo(spec.n, 0), hi(spec.n);
  hi[0] = 2 * k[0] - 2;
  for (std::size_t b = 1; b < spec.n; ++b) {
    hi[b] = 2 * k[b];
    if (variant == IndexSetVariant::G_star && spec.ell[b] == 1) {
      lo[b] = 1;
      hi[b] = 2 * k[b] - 1;
    }
  }
  IndexSetG set{spec, variant, {}};
  Box(MultiIndex(lo), MultiIndex(hi)).for_each([&](const MultiIndex& beta) { set.members.push_back(beta); });
  return set;
}

}  // namespace bergman
