#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

/// Monomial t^e with rational exponent vector e.
using RationalExponent = std::vector<Rational>;

/// Finite sum of terms  c * prod_i t_i^{e_i} * prod_i (log t_i)^{m_i}
/// with exact rational exponents e_i and nonnegative integer log powers m_i.
///
/// Logarithms appear whenever a t^{-1} integrand is integrated against a
/// monomial lower bound; they always disappear again once every variable is
/// integrated over a range ending at 0 or 1.
class FracExpSum {
 public:
  struct Key {
    RationalExponent exps;
    std::vector<unsigned> logs;
    bool operator<(const Key& other) const;
    bool operator==(const Key& other) const;
  };
  using TermMap = std::map<Key, Rational>;

  explicit FracExpSum(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static FracExpSum constant(std::size_t num_vars, const Rational& c);
  static FracExpSum monomial(const RationalExponent& exps, const Rational& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const Rational& c);

  FracExpSum& operator+=(const FracExpSum& other);
  FracExpSum& operator-=(const FracExpSum& other);
  FracExpSum& operator*=(const Rational& c);
  friend FracExpSum operator+(FracExpSum a, const FracExpSum& b) { return a += b; }
  friend FracExpSum operator-(FracExpSum a, const FracExpSum& b) { return a -= b; }
  friend FracExpSum operator*(FracExpSum a, const Rational& c) { return a *= c; }

  FracExpSum multiply_monomial(const RationalExponent& exps) const;

  /// Replaces t_var by the monomial prod_i t_i^{m_i}; m[var] must be zero.
  /// Logs of t_var expand as sum_i m_i log t_i.
  FracExpSum substitute(std::size_t var, const RationalExponent& m) const;

  /// True when the sum is a constant with no log factors (or zero).
  bool is_constant() const;
  /// Value of a constant sum; throws std::logic_error otherwise.
  Rational constant_value() const;

  /// Floating-point evaluation at a point with all t_i > 0 (test support).
  double evaluate(std::span<const double> t) const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

/// An integration limit: either 0, or a monomial in the non-integrated
/// variables (the constant 1 is the all-zero monomial).
struct IntegrationBound {
  bool is_zero = false;
  RationalExponent exps;

  static IntegrationBound zero() { return {true, {}}; }
  static IntegrationBound one(std::size_t num_vars) { return {false, RationalExponent(num_vars, 0)}; }
  static IntegrationBound monomial(RationalExponent exps) { return {false, std::move(exps)}; }
};

/// Definite integral of f over t_var from `lower` to `upper`.
///
/// Returns nullopt when the integral diverges: some term has exponent <= -1
/// in t_var while the lower limit is 0. A lower limit of 0 combined with
/// exponent > -1 makes the antiderivative vanish there.
std::optional<FracExpSum> integrate_one_var(const FracExpSum& f, std::size_t var,
                                            const IntegrationBound& lower,
                                            const IntegrationBound& upper);

}  // namespace bergman
