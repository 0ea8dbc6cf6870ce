#pragma once

#include <string>

#include "bergman/rational.hpp"

namespace bergman {

/// ||e_alpha||^2 as coefficient * pi^pi_power, or +infinity.
class NormValue {
 public:
  static NormValue infinite() { return NormValue(); }
  static NormValue finite(Rational coefficient, unsigned pi_power);

  bool is_finite() const { return finite_; }
  /// Throws std::logic_error on an infinite norm.
  const Rational& coefficient() const;
  unsigned pi_power() const;

  double to_double() const;
  /// "1/2 · π^2" or "infinite".
  std::string to_string() const;

  bool operator==(const NormValue& other) const;

 private:
  NormValue() = default;
  bool finite_ = false;
  Rational coefficient_;
  unsigned pi_power_ = 0;
};

}  // namespace bergman
