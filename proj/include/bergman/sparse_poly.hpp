#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bergman/rational.hpp"

namespace bergman {

/// Sparse multivariate (Laurent) polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector, so the representation is
/// canonical: no zero coefficients, and equality is term-by-term.
class SparsePoly {
 public:
  using Exponent = std::vector<std::int64_t>;
  using TermMap = std::map<Exponent, Rational>;

  explicit SparsePoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePoly constant(std::size_t num_vars, const Rational& c);
  static SparsePoly variable(std::size_t num_vars, std::size_t index);
  static SparsePoly monomial(std::size_t num_vars, Exponent exponent, const Rational& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& exponent) const;
  /// Accumulates c into the coefficient of `exponent`, dropping it if the result is zero.
  void add_term(const Exponent& exponent, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly operator-() const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

  SparsePoly pow(unsigned e) const;

  /// Exact evaluation. Negative exponents require the corresponding point entry to be nonzero.
  Rational evaluate(std::span<const Rational> point) const;

  /// Replaces every variable i by replacements[i] (each over the same or a
  /// different variable set). Exponents must be nonnegative.
  SparsePoly compose(std::span<const SparsePoly> replacements) const;

  /// Sets variable `var` to `replacement` (a polynomial over the same variables).
  SparsePoly substitute(std::size_t var, const SparsePoly& replacement) const;

  /// Exact division by the variable `var`; throws std::domain_error when a
  /// term has exponent zero in `var` (nonzero remainder).
  SparsePoly divide_by_variable(std::size_t var) const;

  /// Re-embeds into `new_num_vars` >= num_vars() variables, new ones with exponent zero.
  SparsePoly extend(std::size_t new_num_vars) const;

  /// New variable i takes the role of old variable perm[i].
  SparsePoly permute(std::span<const std::size_t> perm) const;

  /// Total degree when every term has the same total degree; nullopt otherwise (or for zero).
  std::optional<std::int64_t> homogeneous_degree() const;

  /// Human-readable form such as "t1^2 - 2*t1*t2 + t2^2" (variables named prefix+index, 1-based).
  std::string to_string(const std::string& prefix = "x") const;

  bool operator==(const SparsePoly& other) const = default;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

}  // namespace bergman
