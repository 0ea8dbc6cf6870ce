#include "bergman/norm_value.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bergman {

NormValue NormValue::finite(Rational coefficient, unsigned pi_power) {
  if (coefficient <= 0) throw std::invalid_argument("finite norm must have a positive coefficient");
  NormValue v;
  v.finite_ = true;
  v.coefficient_ = std::move(coefficient);
  v.pi_power_ = pi_power;
  return v;
}

const Rational& NormValue::coefficient() const {
  if (!finite_) throw std::logic_error("coefficient of an infinite norm");
  return coefficient_;
}

unsigned NormValue::pi_power() const {
  if (!finite_) throw std::logic_error("pi power of an infinite norm");
  return pi_power_;
}

double NormValue::to_double() const {
  if (!finite_) return std::numeric_limits<double>::infinity();
  return coefficient_.get_d() * std::pow(std::numbers::pi, static_cast<double>(pi_power_));
}

std::string NormValue::to_string() const {
  if (!finite_) return "infinite";
  return coefficient_.get_str() + " · π^" + std::to_string(pi_power_);
}

bool NormValue::operator==(const NormValue& other) const {
  if (finite_ != other.finite_) return false;
  if (!finite_) return true;
  return pi_power_ == other.pi_power_ && coefficient_ == other.coefficient_;
}

}  // namespace bergman
