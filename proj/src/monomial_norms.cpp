#include "bergman/monomial_norms.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "bergman/checked.hpp"

namespace bergman {

MultiIndex beta_star(const MultiIndex& beta, std::int64_t b, std::size_t s) {
  std::vector<std::int64_t> r(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j)
    r[j] = j < s ? checked::add(beta[j], b) : checked::sub(beta[j], b);
  return MultiIndex(std::move(r));
}

SparsePoly beta_star_substitute(const SparsePoly& p, std::size_t n, std::size_t s) {
  if (p.num_vars() != n) throw std::invalid_argument("beta_star_substitute: polynomial must have n variables");
  std::vector<SparsePoly> reps;
  reps.reserve(n);
  const SparsePoly last = SparsePoly::variable(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    SparsePoly v = SparsePoly::variable(n + 1, j);
    reps.push_back(j < s ? v + last : v - last);
  }
  return p.compose(reps);
}

bool is_norm_finite(const MultiIndex& alpha, std::size_t n, std::size_t s) {
  if (alpha.size() != n || s < 1 || s >= n) throw std::invalid_argument("is_norm_finite: need alpha of length n and 1 <= s < n");
  const MultiIndex beta = alpha.shifted(1);
  for (std::size_t j = 0; j < s; ++j) {
    if (beta[j] <= 0) return false;
    for (std::size_t l = s; l < n; ++l)
      if (checked::add(beta[j], beta[l]) <= 0) return false;
  }
  return true;
}

SparsePoly build_S(std::size_t n, std::size_t s) {
  SparsePoly S = SparsePoly::constant(n, 1);
  for (std::size_t j = 0; j < s; ++j) {
    S *= SparsePoly::variable(n, j);
    for (std::size_t l = s; l < n; ++l) S *= SparsePoly::variable(n, j) + SparsePoly::variable(n, l);
  }
  return S;
}

RSPair build_RS_uncached(std::size_t n, std::size_t s) {
  if (s < 1 || s > n) throw std::invalid_argument("build_RS: need 1 <= s <= n");
  SparsePoly R = SparsePoly::constant(s, 1);
  for (std::size_t m = s; m < n; ++m) {
    // R_{m+1,s}(beta, b) = (R_{m,s}(beta) prod_{j<s}(beta_j + b) - R_{m,s}(beta*) prod_{j<s} beta_j) / b
    const std::size_t vars = m + 1;
    const SparsePoly b = SparsePoly::variable(vars, m);
    SparsePoly shifted_product = SparsePoly::constant(vars, 1);
    SparsePoly plain_product = SparsePoly::constant(vars, 1);
    for (std::size_t j = 0; j < s; ++j) {
      shifted_product *= SparsePoly::variable(vars, j) + b;
      plain_product *= SparsePoly::variable(vars, j);
    }
    SparsePoly f = R.extend(vars) * shifted_product - beta_star_substitute(R, m, s) * plain_product;
    try {
      R = f.divide_by_variable(m);
    } catch (const std::domain_error&) {
      throw std::logic_error("R recursion: division by beta_" + std::to_string(vars) + " left a remainder");
    }
  }
  return RSPair{n, s, std::move(R), build_S(n, s)};
}

std::shared_ptr<const RSPair> build_RS(std::size_t n, std::size_t s) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const RSPair>> cache;
  const auto key = std::make_pair(n, s);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::unique_lock lock(mutex);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto value = std::make_shared<const RSPair>(build_RS_uncached(n, s));
  cache.emplace(key, value);
  return value;
}

namespace {

std::vector<Rational> to_rationals(const MultiIndex& beta) {
  std::vector<Rational> point;
  point.reserve(beta.size());
  for (auto v : beta.entries()) point.emplace_back(to_integer(v));
  return point;
}

}  // namespace

Rational model_D(const MultiIndex& beta, std::size_t s) {
  const std::size_t n = beta.size();
  if (!is_norm_finite(beta.shifted(-1), n, s)) throw std::domain_error("model_D: norm is infinite at beta " + beta.to_string());
  const auto rs = build_RS(n, s);
  const auto point = to_rationals(beta);
  return rs->R.evaluate(point) / rs->S.evaluate(point);
}

NormValue monomial_norm_model(const MultiIndex& alpha, std::size_t n, std::size_t s) {
  if (!is_norm_finite(alpha, n, s)) return NormValue::infinite();
  return NormValue::finite(model_D(alpha.shifted(1), s), static_cast<unsigned>(n));
}

}  // namespace bergman
