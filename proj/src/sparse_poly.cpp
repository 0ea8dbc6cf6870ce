#include "bergman/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>

#include "bergman/checked.hpp"

namespace bergman {

namespace {

void require_same_vars(const SparsePoly& a, const SparsePoly& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("polynomials over different variable counts");
}

}  // namespace

SparsePoly SparsePoly::constant(std::size_t num_vars, const Rational& c) {
  SparsePoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("variable index out of range");
  Exponent e(num_vars, 0);
  e[index] = 1;
  return monomial(num_vars, std::move(e));
}

SparsePoly SparsePoly::monomial(std::size_t num_vars, Exponent exponent, const Rational& c) {
  if (exponent.size() != num_vars) throw std::invalid_argument("exponent length mismatch");
  SparsePoly p(num_vars);
  p.add_term(exponent, c);
  return p;
}

Rational SparsePoly::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& exponent, const Rational& c) {
  if (exponent.size() != num_vars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  Rational v = c;
  if (v.get_den() != 1) v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  require_same_vars(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  require_same_vars(a, b);
  SparsePoly r(a.num_vars());
  SparsePoly::Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::add(ea[i], eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) {
  *this = *this * other;
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(num_vars_, 1);
  SparsePoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] != 0) term *= bergman::pow(point[i], e[i]);
    }
    total += term;
  }
  return total;
}

SparsePoly SparsePoly::compose(std::span<const SparsePoly> replacements) const {
  if (replacements.size() != num_vars_) throw std::invalid_argument("compose: one replacement per variable");
  if (num_vars_ == 0) return *this;
  const std::size_t out_vars = replacements[0].num_vars();
  for (const auto& r : replacements)
    if (r.num_vars() != out_vars) throw std::invalid_argument("compose: replacements over different variables");

  // Powers of each replacement are reused across terms.
  std::vector<std::vector<SparsePoly>> powers(num_vars_);
  auto power_of = [&](std::size_t var, std::int64_t k) -> const SparsePoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(out_vars, 1));
    while (static_cast<std::int64_t>(cache.size()) <= k) cache.push_back(cache.back() * replacements[var]);
    return cache[static_cast<std::size_t>(k)];
  };

  SparsePoly result(out_vars);
  for (const auto& [e, c] : terms_) {
    SparsePoly term = constant(out_vars, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] < 0) throw std::domain_error("compose: negative exponent");
      if (e[i] > 0) term *= power_of(i, e[i]);
    }
    result += term;
  }
  return result;
}

SparsePoly SparsePoly::substitute(std::size_t var, const SparsePoly& replacement) const {
  if (var >= num_vars_) throw std::out_of_range("substitute: variable index out of range");
  require_same_vars(*this, replacement);
  std::vector<SparsePoly> reps;
  reps.reserve(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) reps.push_back(i == var ? replacement : variable(num_vars_, i));
  return compose(reps);
}

SparsePoly SparsePoly::divide_by_variable(std::size_t var) const {
  if (var >= num_vars_) throw std::out_of_range("divide_by_variable: variable index out of range");
  SparsePoly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) throw std::domain_error("division by variable is not exact");
    Exponent q = e;
    q[var] -= 1;
    r.terms_.emplace(std::move(q), c);
  }
  return r;
}

SparsePoly SparsePoly::extend(std::size_t new_num_vars) const {
  if (new_num_vars < num_vars_) throw std::invalid_argument("extend: cannot drop variables");
  SparsePoly r(new_num_vars);
  for (const auto& [e, c] : terms_) {
    Exponent x = e;
    x.resize(new_num_vars, 0);
    r.terms_.emplace(std::move(x), c);
  }
  return r;
}

SparsePoly SparsePoly::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != num_vars_) throw std::invalid_argument("permute: wrong permutation length");
  SparsePoly r(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent x(num_vars_);
    for (std::size_t i = 0; i < num_vars_; ++i) x[i] = e.at(perm[i]);
    r.add_term(x, c);
  }
  return r;
}

std::optional<std::int64_t> SparsePoly::homogeneous_degree() const {
  std::optional<std::int64_t> degree;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (auto v : e) d = checked::add(d, v);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

std::string SparsePoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = true;
    for (auto v : e) constant_term = constant_term && v == 0;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << prefix << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace bergman
