#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/multi_index.hpp"
#include "bergman/rational.hpp"
#include "bergman/sparse_poly.hpp"

namespace bergman {

/// Main denominator factor (prod_{b>=2} t_b^{kb_b} - t_1^{k1})^2.
struct MainDenominator {
  std::int64_t k1 = 1;
  std::vector<std::int64_t> kb;
  bool operator==(const MainDenominator&) const = default;
};

struct UnitFactor {
  std::size_t var = 0;        ///< 0-based coordinate b of (1 - t_b)^multiplicity
  unsigned multiplicity = 2;
  bool operator==(const UnitFactor&) const = default;
};

/// Signature-one Bergman kernel in t_a = z_a conj(w_a):
///
///   scalar_num / (pi^pi_power * L_divisor) * numerator(t) / (main(t) * prod units(t))
///
/// where main and the unit factors are kept factored.
struct RationalKernel {
  Rational scalar_num = 1;
  unsigned pi_power = 0;
  Integer L_divisor = 1;
  SparsePoly numerator;
  MainDenominator denom_main;
  std::vector<UnitFactor> denom_units;

  std::size_t dim() const { return numerator.num_vars(); }
  /// scalar_num / L_divisor; the full rational prefactor without pi.
  Rational prefactor() const;

  /// Same rational function: same pi power and denominator, and equal
  /// prefactor * numerator.
  bool operator==(const RationalKernel& other) const;
  /// Field-by-field equality.
  bool identical(const RationalKernel& other) const;
};

/// Closed-form kernel of any signature-one H(k). Throws DomainError when s != 1.
RationalKernel kernel_signature_one(const DomainSpec& spec);

/// Kernel of Omega_{n,1}: prod t_b / ((prod t_b - t_1)^2 prod (1 - t_b)^2) / pi^n.
RationalKernel kernel_model_sig1(std::size_t n);

/// H(1,-k): t_2^k / ((t_2^k - t_1)^2 (1 - t_2)^2) / pi^2.
RationalKernel kernel_fat_hartogs(std::int64_t k);

/// H(k,-1) from the summed form with the ell(k-ell), ell^2 + (k-ell)^2
/// coefficient groups, over (t_2 - t_1^k)^2 (1 - t_2)^2 and 1/(pi^2 k).
RationalKernel kernel_thin_hartogs(std::int64_t k);

/// Same rational function with the content of the numerator moved into the
/// prefactor, so the numerator has coprime integer coefficients and the
/// prefactor is scalar_num / L_divisor in lowest terms.
RationalKernel reduce_content(const RationalKernel& kernel);

class SingularEvaluation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalOptions {
  /// Evaluation fails when a denominator factor cancels to this relative size:
  /// |P - t_1^{k1}| <= tol (|P| + |t_1^{k1}|) or |1 - t_b| <= tol.
  double singular_tolerance = 1e-12;
};

/// K(z, w) with t_a = z_a conj(w_a), double-precision complex.
std::complex<double> evaluate_kernel(const RationalKernel& kernel,
                                     std::span<const std::complex<double>> z,
                                     std::span<const std::complex<double>> w,
                                     const EvalOptions& options = {});

/// Same with t supplied directly.
std::complex<double> evaluate_kernel_t(const RationalKernel& kernel,
                                       std::span<const std::complex<double>> t,
                                       const EvalOptions& options = {});

/// "1/π² · t2 / ((t2 − t1)² (1 − t2)²)"
std::string kernel_to_plain(const RationalKernel& kernel);
std::string kernel_to_latex(const RationalKernel& kernel);
/// {"pi_power":2,"L":1,"numerator":[{"exp":[0,1],"coef":"1"}],
///  "denom_main":{"k1":1,"kb":[1]},"denom_units":[{"var":2,"mult":2}]}
/// Coefficients are exact decimal rationals; "var" is 1-based.
std::string kernel_to_json(const RationalKernel& kernel);

}  // namespace bergman
