#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace bergman {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Decimal "p/q" form, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, std::int64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);

/// Converts an exact integer to int64, throwing std::overflow_error if it does not fit.
std::int64_t to_int64(const Integer& z);

double to_double(const Rational& q);

}  // namespace bergman
