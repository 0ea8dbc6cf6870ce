#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bergman/monomial_norms.hpp"

using namespace bergman;

namespace {

SparsePoly var(std::size_t n, std::size_t i) { return SparsePoly::variable(n, i); }

MultiIndex random_finite_beta(std::mt19937_64& rng, std::size_t n, std::size_t s) {
  std::uniform_int_distribution<int> d(-6, 8);
  while (true) {
    std::vector<std::int64_t> b(n);
    for (auto& x : b) x = d(rng);
    MultiIndex beta(b);
    if (is_norm_finite(beta.shifted(-1), n, s)) return beta;
  }
}

}  // namespace

TEST(Finiteness, Examples) {
  EXPECT_TRUE(is_norm_finite(MultiIndex{0, 0}, 2, 1));
  EXPECT_FALSE(is_norm_finite(MultiIndex{0, -2}, 2, 1));
  EXPECT_FALSE(is_norm_finite(MultiIndex{2, 0, -3}, 3, 2));
  EXPECT_TRUE(is_norm_finite(MultiIndex{0, -1}, 2, 1));
  EXPECT_FALSE(is_norm_finite(MultiIndex{-1, 0}, 2, 1));
}

TEST(BetaStar, SignsPerBlock) {
  EXPECT_EQ(beta_star(MultiIndex{1, 2, 3}, 4, 2), (MultiIndex{5, 6, -1}));
  EXPECT_EQ(beta_star(MultiIndex{1, 2}, -1, 1), (MultiIndex{0, 3}));
  // polynomial form agrees with pointwise form
  SparsePoly p = var(3, 0) * var(3, 2) + var(3, 1).pow(2);
  SparsePoly q = beta_star_substitute(p, 3, 2);
  std::vector<Rational> pt = {Rational(1), Rational(2), Rational(3), Rational(4)};
  auto bs = beta_star(MultiIndex{1, 2, 3}, 4, 2);
  std::vector<Rational> star = {Rational(bs[0]), Rational(bs[1]), Rational(bs[2])};
  EXPECT_EQ(q.evaluate(pt), p.evaluate(star));
}

TEST(BuildRS, KnownPolynomials) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto rs = build_RS(n, 1);
    EXPECT_EQ(rs->R, SparsePoly::constant(n, 1));
  }
  auto r32 = build_RS(3, 2);
  EXPECT_EQ(r32->R, var(3, 0) + var(3, 1) + var(3, 2));
  for (std::size_t s = 1; s <= 4; ++s) {
    auto rs = build_RS(s, s);
    EXPECT_EQ(rs->R, SparsePoly::constant(s, 1));
    SparsePoly prod = SparsePoly::constant(s, 1);
    for (std::size_t j = 0; j < s; ++j) prod *= var(s, j);
    EXPECT_EQ(rs->S, prod);
  }
  EXPECT_EQ(build_S(2, 1), var(2, 0) * (var(2, 0) + var(2, 1)));
  EXPECT_THROW(build_RS(2, 3), std::invalid_argument);
}

TEST(BuildRS, CacheReturnsSameObject) {
  EXPECT_EQ(build_RS(4, 2).get(), build_RS(4, 2).get());
  EXPECT_EQ(build_RS(4, 2)->R, build_RS_uncached(4, 2).R);
}

TEST(BuildRS, HomogeneitySymmetryAndNoCommonFactor) {
  std::mt19937_64 rng(99);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t s = 1; s < n; ++s) {
      const auto rs = build_RS(n, s);
      const auto deg = static_cast<std::int64_t>((n - s) * (s - 1));
      EXPECT_EQ(rs->R.homogeneous_degree(), deg) << n << "," << s;
      std::uniform_int_distribution<int> d(-5, 9);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> b(n), b2(n), b3(n);
        for (std::size_t j = 0; j < n; ++j) {
          b[j] = d(rng);
          b2[j] = 2 * b[j];
          b3[j] = 3 * b[j];
        }
        EXPECT_EQ(rs->R.evaluate(b2), pow(Rational(2), deg) * rs->R.evaluate(b));
        EXPECT_EQ(rs->R.evaluate(b3), pow(Rational(3), deg) * rs->R.evaluate(b));
      }
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.begin() + s, rng);
        std::shuffle(perm.begin() + s, perm.end(), rng);
        EXPECT_EQ(rs->R.permute(perm), rs->R);
        EXPECT_EQ(rs->S.permute(perm), rs->S);
      }
      for (std::size_t j = 0; j < s; ++j) {
        EXPECT_FALSE(rs->R.substitute(j, SparsePoly(n)).is_zero());
        for (std::size_t l = s; l < n; ++l) EXPECT_FALSE(rs->R.substitute(l, -var(n, j)).is_zero());
      }
    }
}

TEST(ModelNorm, Examples) {
  EXPECT_EQ(monomial_norm_model(MultiIndex{0, 0}, 2, 1), NormValue::finite(Rational(1, 2), 2));
  EXPECT_EQ(monomial_norm_model(MultiIndex{0, 0, 0}, 3, 2), NormValue::finite(Rational(3, 4), 3));
  EXPECT_FALSE(monomial_norm_model(MultiIndex{-1, 0}, 2, 1).is_finite());
  // Omega_{n,1}: pi^n / (beta_1 prod (beta_1 + beta_b))
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      MultiIndex beta = random_finite_beta(rng, n, 1);
      Integer den = to_integer(beta[0]);
      for (std::size_t b = 1; b < n; ++b) den *= to_integer(beta[0] + beta[b]);
      EXPECT_EQ(model_D(beta, 1), Rational(1) / Rational(den));
    }
}

TEST(ModelNorm, DRecursionExact) {
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 2 + rng() % 4;  // n = 2..5, D_{n+1,s} up to six variables
    const std::size_t s = 1 + rng() % (n - 1);
    MultiIndex full = random_finite_beta(rng, n + 1, s);
    const std::int64_t b = full[n];
    if (b == 0) continue;
    MultiIndex beta(std::vector<std::int64_t>(full.vec().begin(), full.vec().begin() + n));
    const Rational lhs = model_D(full, s);
    const Rational rhs = (model_D(beta, s) - model_D(beta_star(beta, b, s), s)) / Rational(to_integer(b));
    ASSERT_EQ(lhs, rhs) << full.to_string() << " s=" << s;
    ++checked;
  }
}
