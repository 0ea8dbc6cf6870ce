#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bergman/multi_index.hpp"
#include "bergman/rational.hpp"

namespace bergman {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An elementary Reinhardt domain H(k) = { z in D^n : |z^k| < 1 } in the
/// normalized frame: positive exponents first, gcd of |k_a| equal to one.
struct DomainSpec {
  MultiIndex k;
  std::size_t n = 0;
  std::size_t s = 0;        ///< signature, number of positive entries
  Integer K;                ///< lcm(|k_1|, ..., |k_n|)
  MultiIndex ell;           ///< ell_a = K / |k_a|
  Integer L;                ///< prod ell_a
  bool is_model = false;    ///< every |k_a| == 1
  /// Normalized coordinate i is raw coordinate permutation[i].
  std::vector<std::size_t> permutation;

  /// |k_a| for every coordinate.
  MultiIndex abs_k() const;
  bool operator==(const DomainSpec&) const = default;
  std::string to_string() const;
};

/// Divides by the gcd and moves positive entries ahead of negative ones
/// (stable within each block). Rejects zero entries and single-sign inputs.
DomainSpec normalize_spec(const MultiIndex& raw_k);

/// The model domain Omega_{n,s}: s entries +1 followed by n-s entries -1.
DomainSpec model_spec(std::size_t n, std::size_t s);

struct LcmData {
  Integer K;
  MultiIndex ell;
  Integer L;
};

LcmData lcm_data(const MultiIndex& k_abs);

/// Exponents of the diagonal proper map z -> (z_1^ell_1, ..., z_n^ell_n) from Omega_{n,s} onto H(k).
MultiIndex standard_proper_map_exponents(const DomainSpec& spec);

/// Membership of t = (|z_1|, ..., |z_n|) (or of t = |z|^2; the test is the same) in the Reinhardt shadow.
bool shadow_contains(std::span<const double> t, const DomainSpec& spec);

}  // namespace bergman
