#include "bergman/domain.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "bergman/checked.hpp"

namespace bergman {

MultiIndex DomainSpec::abs_k() const {
  std::vector<std::int64_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = k[i] < 0 ? -k[i] : k[i];
  return MultiIndex(std::move(a));
}

std::string DomainSpec::to_string() const {
  std::ostringstream os;
  os << "H" << k.to_string() << " [n=" << n << ", s=" << s << ", K=" << K << ", ell=" << ell.to_string()
     << ", L=" << L << "]";
  return os.str();
}

LcmData lcm_data(const MultiIndex& k_abs) {
  if (k_abs.size() == 0) throw DomainError("lcm_data: empty multi-index");
  Integer g = 0, K = 1;
  for (auto v : k_abs.entries()) {
    if (v <= 0) throw DomainError("lcm_data: entries must be positive");
    Integer z = to_integer(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    mpz_lcm(K.get_mpz_t(), K.get_mpz_t(), z.get_mpz_t());
  }
  if (g != 1) throw DomainError("lcm_data: entries are not relatively prime");

  std::vector<std::int64_t> ell(k_abs.size());
  Integer L = 1, lcm_ell = 1;
  for (std::size_t i = 0; i < k_abs.size(); ++i) {
    Integer l = K / to_integer(k_abs[i]);
    ell[i] = to_int64(l);
    L *= l;
    mpz_lcm(lcm_ell.get_mpz_t(), lcm_ell.get_mpz_t(), l.get_mpz_t());
  }
  if (lcm_ell != K) throw std::logic_error("lcm(ell) != K for relatively prime input");
  return {K, MultiIndex(std::move(ell)), L};
}

DomainSpec normalize_spec(const MultiIndex& raw_k) {
  const std::size_t n = raw_k.size();
  if (n < 2) throw DomainError("domain needs at least two coordinates");
  std::int64_t g = 0;
  std::size_t positives = 0;
  for (auto v : raw_k.entries()) {
    if (v == 0) throw DomainError("defining multi-index has a zero entry");
    if (v == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("entry out of range");
    g = std::gcd(g, v < 0 ? -v : v);
    if (v > 0) ++positives;
  }
  if (positives == 0 || positives == n)
    throw DomainError("defining multi-index needs both positive and negative entries (signature " +
                      std::to_string(positives) + ")");

  DomainSpec spec;
  spec.n = n;
  spec.s = positives;
  std::vector<std::int64_t> k;
  k.reserve(n);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < n; ++i) {
      bool pos = raw_k[i] > 0;
      if ((pass == 0) == pos) {
        spec.permutation.push_back(i);
        k.push_back(raw_k[i] / g);
      }
    }
  }
  spec.k = MultiIndex(std::move(k));
  auto data = lcm_data(spec.abs_k());
  spec.K = data.K;
  spec.ell = data.ell;
  spec.L = data.L;
  spec.is_model = spec.K == 1;
  return spec;
}

DomainSpec model_spec(std::size_t n, std::size_t s) {
  if (s < 1 || s >= n) throw DomainError("model domain needs 1 <= s <= n-1");
  std::vector<std::int64_t> k(n, -1);
  for (std::size_t i = 0; i < s; ++i) k[i] = 1;
  return normalize_spec(MultiIndex(std::move(k)));
}

MultiIndex standard_proper_map_exponents(const DomainSpec& spec) { return spec.ell; }

bool shadow_contains(std::span<const double> t, const DomainSpec& spec) {
  if (t.size() != spec.n) throw std::invalid_argument("shadow_contains: dimension mismatch");
  double lhs = 1.0, rhs = 1.0;
  for (std::size_t a = 0; a < spec.n; ++a) {
    if (!(t[a] >= 0.0 && t[a] < 1.0)) return false;
    double p = std::pow(t[a], static_cast<double>(spec.k[a] < 0 ? -spec.k[a] : spec.k[a]));
    (a < spec.s ? lhs : rhs) *= p;
  }
  return lhs < rhs;
}

}  // namespace bergman
