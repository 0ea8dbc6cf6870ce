#include <gtest/gtest.h>

#include "bergman/monomial_norms.hpp"
#include "bergman/series.hpp"
#include "bergman/shadow_oracle.hpp"

using namespace bergman;

TEST(SeriesModel, Examples) {
  Box box(MultiIndex{0, -4}, MultiIndex{4, 4});
  auto c = series_coefficients_model(2, 1, box);
  EXPECT_EQ(c.pi_power(), 2u);
  EXPECT_EQ(c.coefficient(MultiIndex{0, 0}), Rational(2));
  EXPECT_EQ(c.coefficient(MultiIndex{0, -1}), Rational(1));
  EXPECT_EQ(c.coefficient(MultiIndex{0, -2}), Rational(0));
  EXPECT_EQ(c.size(), 39u);
  auto c3 = series_coefficients_model(3, 2, Box(MultiIndex::constant(3, -1), MultiIndex::constant(3, 1)));
  EXPECT_EQ(c3.coefficient(MultiIndex{0, 0, 0}), Rational(4, 3));
  EXPECT_FALSE(c.truncated());
}

TEST(ExpandClosedForm, HartogsCoefficients) {
  Box box(MultiIndex{0, -4}, MultiIndex{4, 4});
  auto c = expand_closed_form(kernel_model_sig1(2), box);
  EXPECT_EQ(c.coefficient(MultiIndex{0, 0}), Rational(2));
  EXPECT_EQ(c.coefficient(MultiIndex{0, -1}), Rational(1));
  for (const auto& [alpha, coef] : c.terms()) EXPECT_TRUE(is_norm_finite(alpha, 2, 1)) << alpha.to_string();
  // (alpha_1 + 1)(alpha_1 + alpha_2 + 2)
  box.for_each([&](const MultiIndex& a) {
    const std::int64_t v = (a[0] + 1) * (a[0] + a[1] + 2);
    EXPECT_EQ(c.coefficient(a), v > 0 && a[0] >= 0 ? Rational(to_integer(v)) : Rational(0)) << a.to_string();
  });
}

TEST(ExpandClosedForm, MatchesModelSeries) {
  for (std::size_t n = 2; n <= 4; ++n) {
    MultiIndex lo = MultiIndex::constant(n, -5).with(0, 0), hi = MultiIndex::constant(n, 5);
    Box box(lo, hi);
    EXPECT_EQ(expand_closed_form(kernel_model_sig1(n), box), series_coefficients_model(n, 1, box)) << n;
  }
}

TEST(ExpandClosedForm, MatchesOracleSmallBox) {
  for (const auto& raw : {MultiIndex{2, -3}, MultiIndex{3, -1}, MultiIndex{1, -2, -3}}) {
    const auto spec = normalize_spec(raw);
    MultiIndex lo = MultiIndex::constant(spec.n, -4).with(0, 0), hi = MultiIndex::constant(spec.n, 4);
    Box box(lo, hi);
    EXPECT_EQ(expand_closed_form(kernel_signature_one(spec), box), series_coefficients_oracle(spec, box))
        << raw.to_string();
  }
}

TEST(SliceCoefficients, Examples) {
  auto a = slice_coefficients(3, 50);
  EXPECT_EQ(a[0], Rational(1, 3));
  for (std::size_t k = 1; k <= 50; ++k) EXPECT_EQ(a[k - 1], Rational(1, static_cast<long>(k + 2)));
  EXPECT_EQ(slice_coefficients(4, 1)[0], Rational(1, 7));
  EXPECT_THROW(slice_coefficients(2, 5), std::invalid_argument);
  EXPECT_THROW(slice_coefficients(3, 0), std::invalid_argument);
}

TEST(SliceCoefficients, ReadOffModelSeries) {
  // Omega_{n,n-1} along alpha = (0,...,0,k-1):
  //   coefficient = t_n^{-1}/(n-1) + sum k t^{k-1} + b-hat(t_n)
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::size_t count = 12;
    MultiIndex lo = MultiIndex::zeros(n).with(n - 1, -1), hi = MultiIndex::zeros(n).with(n - 1, count - 1);
    auto c = series_coefficients_model(n, n - 1, Box(lo, hi));
    const auto a = slice_coefficients(n, count);
    EXPECT_EQ(c.coefficient(MultiIndex::zeros(n).with(n - 1, -1)), Rational(1, static_cast<long>(n - 1)));
    for (std::size_t k = 1; k < count; ++k) {
      const Rational coef = c.coefficient(MultiIndex::zeros(n).with(n - 1, static_cast<std::int64_t>(k) - 1));
      EXPECT_EQ(coef - Rational(static_cast<long>(k)), a[k - 1]) << "n=" << n << " k=" << k;
    }
  }
  // direct form n=3: coefficient of t_3^{k-1} on beta_1 = beta_2 = 1 is k + 1/(k+2)
  auto c = series_coefficients_model(3, 2, Box(MultiIndex{0, 0, 0}, MultiIndex{0, 0, 6}));
  for (int k = 1; k <= 7; ++k) EXPECT_EQ(c.coefficient(MultiIndex{0, 0, k - 1}), Rational(k) + Rational(1, k + 2));
}

TEST(RationalityDiagnostic, Examples) {
  EXPECT_EQ(rationality_diagnostic(slice_coefficients(3, 100)), DecayVerdict::polynomial_decay);
  std::vector<Rational> geo, constant(40, Rational(3)), slow;
  for (int k = 1; k <= 60; ++k) geo.push_back(pow(Rational(1, 2), k));
  EXPECT_EQ(rationality_diagnostic(geo), DecayVerdict::exponential_decay);
  EXPECT_EQ(rationality_diagnostic(constant), DecayVerdict::polynomial_decay);
  for (int k = 1; k <= 200; ++k) slow.push_back(pow(Rational(99, 100), k));
  EXPECT_EQ(rationality_diagnostic(slow), DecayVerdict::inconclusive);
  for (std::size_t n = 3; n <= 5; ++n)
    EXPECT_EQ(rationality_diagnostic(slice_coefficients(n, 200)), DecayVerdict::polynomial_decay) << n;
  EXPECT_EQ(to_string(DecayVerdict::exponential_decay), "exponential_decay");
}

TEST(RationalityDiagnostic, Errors) {
  EXPECT_THROW(rationality_diagnostic(slice_coefficients(3, 10)), std::invalid_argument);
  std::vector<Rational> bad(30, Rational(1));
  bad[5] = 0;
  EXPECT_THROW(rationality_diagnostic(bad), std::invalid_argument);
}

TEST(AnnihilatingOperator, Examples) {
  Box box(MultiIndex{-3, -3}, MultiIndex{4, 4});
  auto out = apply_annihilating_operator(2, 1, series_coefficients_model(2, 1, box));
  EXPECT_EQ(out.coefficient(MultiIndex{1, 1}), Rational(2));
  auto zero = apply_annihilating_operator(2, 1, LaurentChunk(box, 2));
  EXPECT_TRUE(zero.is_zero());
}

TEST(AnnihilatingOperator, ProducesS) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t s = 1; s < n; ++s) {
      Box box(MultiIndex::constant(n, -4), MultiIndex::constant(n, 3));
      auto out = apply_annihilating_operator(n, s, series_coefficients_model(n, s, box));
      const auto rs = build_RS(n, s);
      out.box().for_each([&](const MultiIndex& beta) {
        if (!out.box().interior(beta)) return;
        std::vector<Rational> pt(beta.vec().begin(), beta.vec().end());
        const Rational S = rs->S.evaluate(pt);
        // zero-norm exponents carry no term, and S vanishes or the norm is infinite there
        if (is_norm_finite(beta.shifted(-1), n, s))
          EXPECT_EQ(out.coefficient(beta), S) << beta.to_string();
        else
          EXPECT_EQ(out.coefficient(beta), Rational(0));
      });
    }
}
