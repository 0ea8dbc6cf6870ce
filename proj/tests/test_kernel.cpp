#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/kernel.hpp"
#include "bergman/numeric.hpp"

using namespace bergman;
using cd = std::complex<double>;

namespace {

SparsePoly mono(std::vector<std::int64_t> e, const Rational& c = 1) { return SparsePoly::monomial(e.size(), e, c); }

}  // namespace

TEST(Kernel, HartogsTriangle) {
  auto k = kernel_signature_one(normalize_spec(MultiIndex{1, -1}));
  EXPECT_EQ(k.pi_power, 2u);
  EXPECT_EQ(k.prefactor(), Rational(1));
  EXPECT_EQ(k.numerator, mono({0, 1}));
  EXPECT_EQ(k.denom_main, (MainDenominator{1, {1}}));
  ASSERT_EQ(k.denom_units.size(), 1u);
  EXPECT_EQ(k.denom_units[0], (UnitFactor{1, 2}));
  EXPECT_TRUE(k.identical(kernel_model_sig1(2)));
  EXPECT_EQ(kernel_to_plain(k), "1/π² · t2 / ((t2 − t1)² (1 − t2)²)");
}

TEST(Kernel, ThinTwo) {
  auto k = kernel_signature_one(normalize_spec(MultiIndex{2, -1}));
  SparsePoly expect = mono({0, 1}) + mono({2, 0}) + mono({1, 1}, 4) + mono({2, 1}) + mono({0, 2});
  EXPECT_EQ(k.numerator, expect);
  EXPECT_EQ(k.prefactor(), Rational(1, 2));
  EXPECT_EQ(k.denom_main, (MainDenominator{2, {1}}));
  EXPECT_TRUE(k.identical(kernel_thin_hartogs(2)));
}

TEST(Kernel, GoldenFormulas) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    auto a = kernel_signature_one(normalize_spec(MultiIndex{1, -k}));
    EXPECT_TRUE(a == kernel_fat_hartogs(k)) << k;
    EXPECT_EQ(a.numerator, mono({0, k}, Rational(to_integer(k))));
    EXPECT_EQ(a.L_divisor, to_integer(k));
    EXPECT_TRUE(reduce_content(a).identical(kernel_fat_hartogs(k))) << k;
  }
  for (std::int64_t k = 2; k <= 8; ++k) {
    auto a = kernel_signature_one(normalize_spec(MultiIndex{k, -1}));
    auto b = kernel_thin_hartogs(k);
    EXPECT_TRUE(a.identical(b)) << k;
    EXPECT_TRUE(reduce_content(a).identical(a)) << k;
    for (std::int64_t l = 1; l <= k; ++l)
      EXPECT_EQ(b.numerator.coefficient({l - 1, 1}), Rational(to_integer(l * l)))
          << "k=" << k << " l=" << l;
  }
}

TEST(Kernel, ModelConsistency) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::int64_t> raw(n, -1);
    raw[0] = 1;
    EXPECT_TRUE(kernel_signature_one(normalize_spec(MultiIndex(raw))).identical(kernel_model_sig1(n))) << n;
  }
  auto k3 = kernel_model_sig1(3);
  EXPECT_EQ(k3.numerator, mono({0, 1, 1}));
  EXPECT_EQ(kernel_to_plain(k3), "1/π³ · t2 t3 / ((t2 t3 − t1)² (1 − t2)² (1 − t3)²)");
}

TEST(Kernel, RejectsHigherSignature) {
  EXPECT_THROW(kernel_signature_one(normalize_spec(MultiIndex{1, 1, -1})), DomainError);
  EXPECT_THROW(kernel_thin_hartogs(1), DomainError);
  EXPECT_THROW(kernel_fat_hartogs(0), DomainError);
}

TEST(Kernel, EqualityIsRationalFunctionEquality) {
  auto a = kernel_fat_hartogs(2);
  auto b = a;
  b.scalar_num = 3;
  b.L_divisor = 3;
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(a.identical(b));
  b.numerator *= Rational(2);
  EXPECT_FALSE(a == b);
}

TEST(Kernel, EvaluateHartogsPoint) {
  auto k = kernel_model_sig1(2);
  std::vector<cd> z = {0.25, 0.5};
  const cd v = evaluate_kernel(k, z, z);
  const double t1 = 0.0625, t2 = 0.25;
  const double expect = t2 / ((t2 - t1) * (t2 - t1) * (1 - t2) * (1 - t2)) / (std::numbers::pi * std::numbers::pi);
  EXPECT_NEAR(v.real(), expect, 1e-14 * expect);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  EXPECT_NEAR(v.real() * std::numbers::pi * std::numbers::pi, 1024.0 / 81.0, 1e-12);
}

TEST(Kernel, BlowsUpAtBoundaryAndGuardsSingularity) {
  auto k = kernel_model_sig1(2);
  double prev = 0.0;
  for (double r : {0.9, 0.99, 0.999, 0.9999}) {
    std::vector<cd> z = {0.1, r};
    const double v = std::abs(evaluate_kernel(k, z, z));
    EXPECT_GT(v, prev);
    prev = v;
  }
  std::vector<cd> t = {0.5, 0.5};
  EXPECT_THROW(evaluate_kernel_t(k, t), SingularEvaluation);
}

TEST(Kernel, HermitianAndDiagonalPositive) {
  std::mt19937_64 rng(4);
  const std::vector<MultiIndex> ks = {MultiIndex{1, -1}, MultiIndex{2, -1}, MultiIndex{2, -3}, MultiIndex{1, -2, -3}};
  for (const auto& raw : ks) {
    const auto spec = normalize_spec(raw);
    const auto k = kernel_signature_one(spec);
    for (int i = 0; i < 100; ++i) {
      auto z = random_domain_point(spec, rng, 0.01);
      auto w = random_domain_point(spec, rng, 0.01);
      const cd a = evaluate_kernel(k, z, w), b = evaluate_kernel(k, w, z);
      EXPECT_LE(std::abs(a - std::conj(b)), 1e-12 * std::abs(a));
      const cd d = evaluate_kernel(k, z, z);
      EXPECT_GT(d.real(), 0.0);
      EXPECT_LE(std::abs(d.imag()), 1e-12 * d.real());
    }
  }
}

TEST(Kernel, Emitters) {
  EXPECT_EQ(kernel_to_plain(kernel_fat_hartogs(2)), "1/π² · t2² / ((t2² − t1)² (1 − t2)²)");
  EXPECT_EQ(kernel_to_plain(kernel_thin_hartogs(2)),
            "1/(2π²) · (t2 + t2² + 4 t1 t2 + t1² + t1² t2) / ((t2 − t1²)² (1 − t2)²)");
  EXPECT_EQ(kernel_to_json(kernel_fat_hartogs(2)),
            R"({"pi_power":2,"L":1,"numerator":[{"exp":[0,2],"coef":"1"}],"denom_main":{"k1":1,"kb":[2]},)"
            R"("denom_units":[{"var":2,"mult":2}]})");
  EXPECT_EQ(kernel_to_latex(kernel_model_sig1(2)),
            "\\frac{1}{\\pi^{2}} \\cdot \\frac{t_{2}}{\\left(t_{2} - t_{1}\\right)^{2} \\left(1 - t_{2}\\right)^{2}}");
  const std::string thin = kernel_to_latex(kernel_thin_hartogs(3));
  EXPECT_NE(thin.find("\\frac{1}{3\\pi^{2}}"), std::string::npos);
}
