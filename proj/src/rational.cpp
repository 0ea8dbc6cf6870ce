#include "bergman/rational.hpp"

#include <limits>
#include <stdexcept>

namespace bergman {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits_before = false, digits_after = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/' && !slash) {
      slash = true;
    } else if (c >= '0' && c <= '9') {
      (slash ? digits_after : digits_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (!digits_before || (slash && !digits_after)) throw std::invalid_argument("malformed rational: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  q.set_str(body, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  auto e = static_cast<std::uint64_t>(exponent);
  Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in int64: " + z.get_str());
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return z.get_si();
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace bergman
