#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "bergman/frac_exp_sum.hpp"

using namespace bergman;

namespace {

FracExpSum mono(std::vector<Rational> e, const Rational& c = 1) { return FracExpSum::monomial(e, c); }

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
               double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * eps) return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

double quad(const std::function<double(double)>& f, double a, double b) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), 1e-14, 60);
}

}  // namespace

TEST(FracExpSum, PowerRule) {
  for (int beta = 1; beta <= 6; ++beta) {
    auto r = integrate_one_var(mono({Rational(beta - 1)}), 0, IntegrationBound::zero(), IntegrationBound::one(1));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->constant_value(), Rational(1, beta));
  }
}

TEST(FracExpSum, MonomialLowerBound) {
  // int_{t1}^{1} dt2 = 1 - t1
  auto r = integrate_one_var(FracExpSum::constant(2, 1), 1, IntegrationBound::monomial({1, 0}),
                             IntegrationBound::one(2));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->terms().size(), 2u);
  std::vector<double> pt = {0.3, 0.7};
  EXPECT_NEAR(r->evaluate(pt), 0.7, 1e-15);
}

TEST(FracExpSum, RationalExponentBound) {
  // int_{t1^{1/2}}^{1} dt2 = 1 - t1^{1/2}
  auto r = integrate_one_var(FracExpSum::constant(2, 1), 1, IntegrationBound::monomial({Rational(1, 2), 0}),
                             IntegrationBound::one(2));
  ASSERT_TRUE(r);
  FracExpSum expect = FracExpSum::constant(2, 1) - mono({Rational(1, 2), 0});
  EXPECT_EQ(r->terms(), expect.terms());
}

TEST(FracExpSum, DivergesAtZero) {
  EXPECT_FALSE(integrate_one_var(mono({Rational(-1)}), 0, IntegrationBound::zero(), IntegrationBound::one(1)));
  EXPECT_FALSE(integrate_one_var(mono({Rational(-3, 2)}), 0, IntegrationBound::zero(), IntegrationBound::one(1)));
  EXPECT_TRUE(integrate_one_var(mono({Rational(-1, 2)}), 0, IntegrationBound::zero(), IntegrationBound::one(1)));
}

TEST(FracExpSum, ReciprocalGivesLog) {
  // int_{t1}^{1} t2^{-1} dt2 = -log t1, then int_0^1 -log t1 dt1 = 1
  auto inner = integrate_one_var(mono({0, Rational(-1)}), 1, IntegrationBound::monomial({1, 0}),
                                 IntegrationBound::one(2));
  ASSERT_TRUE(inner);
  std::vector<double> pt = {0.25, 0.5};
  EXPECT_NEAR(inner->evaluate(pt), -std::log(0.25), 1e-14);
  auto outer = integrate_one_var(*inner, 0, IntegrationBound::zero(), IntegrationBound::one(2));
  ASSERT_TRUE(outer);
  EXPECT_EQ(outer->constant_value(), Rational(1));
}

TEST(FracExpSum, Linearity) {
  FracExpSum f = mono({Rational(1, 3), 1}, 2), g = mono({Rational(2), Rational(1, 2)}, -5);
  auto lo = IntegrationBound::monomial({0, Rational(1, 2)});
  auto up = IntegrationBound::one(2);
  auto a = integrate_one_var(f * Rational(3) + g, 0, lo, up);
  auto fa = integrate_one_var(f, 0, lo, up), ga = integrate_one_var(g, 0, lo, up);
  ASSERT_TRUE(a && fa && ga);
  EXPECT_EQ(a->terms(), (*fa * Rational(3) + *ga).terms());
}

TEST(FracExpSum, AgreesWithQuadrature) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-2, 12), den(1, 4), coef(-5, 5), nterms(1, 4);
  std::uniform_real_distribution<double> point(0.2, 0.9);
  for (int trial = 0; trial < 50; ++trial) {
    FracExpSum f(2);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      if (q <= -1) q = Rational(-1, 2);
      f += mono({q, Rational(num(rng), den(rng))}, coef(rng) == 0 ? 1 : coef(rng));
    }
    // lower bound t2^{p} with p > 0, upper 1, evaluated at t2 = x
    Rational p(1 + trial % 3, 1 + trial % 2);
    auto r = integrate_one_var(f, 0, IntegrationBound::monomial({0, p}), IntegrationBound::one(2));
    ASSERT_TRUE(r);
    const double x = point(rng);
    const double lower = std::pow(x, p.get_d());
    auto integrand = [&](double t) {
      std::vector<double> pt = {t, x};
      return f.evaluate(pt);
    };
    const double q = quad(integrand, lower, 1.0);
    std::vector<double> pt = {0.5, x};
    const double exact = r->evaluate(pt);
    EXPECT_LT(std::abs(exact - q), 1e-9 * std::max(1.0, std::abs(q))) << "trial " << trial;
  }
}

TEST(FracExpSum, SubstituteExpandsLogs) {
  FracExpSum f(2);
  f.add_term({{Rational(1), Rational(0)}, {1, 0}}, 1);  // t1 log t1
  auto g = f.substitute(0, {0, Rational(2)});           // t2^2 * 2 log t2
  std::vector<double> pt = {0.9, 0.4};
  EXPECT_NEAR(g.evaluate(pt), 0.16 * 2 * std::log(0.4), 1e-15);
}
