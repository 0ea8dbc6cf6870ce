#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bergman/domain.hpp"
#include "bergman/kernel.hpp"
#include "bergman/laurent_chunk.hpp"
#include "bergman/rational.hpp"

namespace bergman {

/// Coefficients pi^n / ||e_alpha||^2 = S(beta)/R(beta) of the Omega_{n,s}
/// kernel for every finite-norm alpha in the box (pi_power n on the chunk).
LaurentChunk series_coefficients_model(std::size_t n, std::size_t s, const Box& box);

/// Coefficients pi^n / ||e_alpha||^2 for an arbitrary domain, norms taken
/// from the shadow integral.
LaurentChunk series_coefficients_oracle(const DomainSpec& spec, const Box& box);

/// Laurent expansion of a closed-form kernel inside the box, about the
/// region |t_1^{k1}| < |prod t_b^{kb}|, |t_b| < 1. Every in-box coefficient is final.
LaurentChunk expand_closed_form(const RationalKernel& kernel, const Box& box);

/// a_k = k / ((k+1)^{n-1} - 1), k = 1..count. Requires n >= 3, count >= 1.
std::vector<Rational> slice_coefficients(std::size_t n, std::size_t count);

enum class DecayVerdict { polynomial_decay, exponential_decay, inconclusive };

std::string to_string(DecayVerdict v);

struct DiagnosticThresholds {
  double delta = 0.05;          ///< exponential: tail ratios below 1 - delta
  double window = 10.0;         ///< polynomial: |r_k - 1| < window / k on the tail
  double trend_slack = 1.5;     ///< polynomial: k |1 - r_k| may grow at most by this factor over the tail
  double spread = 0.05;         ///< exponential: tail ratios within this band
};

/// Classifies a positive coefficient sequence (at least 20 terms) by the
/// behaviour of the ratios a_{k+1}/a_k over the second half of the sequence.
/// Throws std::invalid_argument for short or non-positive input.
DecayVerdict rationality_diagnostic(std::span<const Rational> coeffs,
                                    const DiagnosticThresholds& thresholds = {});

/// R_{n,s}(t_1 d_1, ..., t_n d_n) applied after multiplication by t_1...t_n.
/// The output box is the input box shifted by one; Euler operators act
/// diagonally on monomials, so no output coefficient is truncated.
LaurentChunk apply_annihilating_operator(std::size_t n, std::size_t s, const LaurentChunk& chunk);

}  // namespace bergman
