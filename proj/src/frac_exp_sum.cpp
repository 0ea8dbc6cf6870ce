#include "bergman/frac_exp_sum.hpp"

#include <cmath>
#include <stdexcept>

namespace bergman {

bool FracExpSum::Key::operator<(const Key& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < other.exps[i]) return true;
    if (other.exps[i] < exps[i]) return false;
  }
  return logs < other.logs;
}

bool FracExpSum::Key::operator==(const Key& other) const {
  return exps == other.exps && logs == other.logs;
}

FracExpSum FracExpSum::constant(std::size_t num_vars, const Rational& c) {
  FracExpSum f(num_vars);
  f.add_term({RationalExponent(num_vars, 0), std::vector<unsigned>(num_vars, 0)}, c);
  return f;
}

FracExpSum FracExpSum::monomial(const RationalExponent& exps, const Rational& c) {
  FracExpSum f(exps.size());
  RationalExponent e = exps;
  for (auto& x : e) x.canonicalize();
  f.add_term({std::move(e), std::vector<unsigned>(exps.size(), 0)}, c);
  return f;
}

void FracExpSum::add_term(const Key& key, const Rational& c) {
  if (key.exps.size() != num_vars_ || key.logs.size() != num_vars_)
    throw std::invalid_argument("FracExpSum: key dimension mismatch");
  if (c == 0) return;
  Rational v = c;
  if (v.get_den() != 1) v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

FracExpSum& FracExpSum::operator+=(const FracExpSum& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("FracExpSum: dimension mismatch");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

FracExpSum& FracExpSum::operator-=(const FracExpSum& other) {
  if (other.num_vars_ != num_vars_) throw std::invalid_argument("FracExpSum: dimension mismatch");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

FracExpSum& FracExpSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

FracExpSum FracExpSum::multiply_monomial(const RationalExponent& exps) const {
  if (exps.size() != num_vars_) throw std::invalid_argument("FracExpSum: monomial dimension mismatch");
  FracExpSum r(num_vars_);
  for (const auto& [k, c] : terms_) {
    Key key = k;
    for (std::size_t i = 0; i < num_vars_; ++i) key.exps[i] += exps[i];
    r.add_term(key, c);
  }
  return r;
}

namespace {

// Multiplies every term by (sum_r m_r log t_r).
FracExpSum multiply_log_form(const FracExpSum& f, const RationalExponent& m) {
  FracExpSum r(f.num_vars());
  for (const auto& [k, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      FracExpSum::Key key = k;
      key.logs[i] += 1;
      r.add_term(key, c * m[i]);
    }
  }
  return r;
}

}  // namespace

FracExpSum FracExpSum::substitute(std::size_t var, const RationalExponent& m) const {
  if (var >= num_vars_ || m.size() != num_vars_) throw std::invalid_argument("FracExpSum::substitute: bad arguments");
  if (m[var] != 0) throw std::invalid_argument("FracExpSum::substitute: bound depends on the substituted variable");
  FracExpSum r(num_vars_);
  for (const auto& [k, c] : terms_) {
    Key base = k;
    const Rational power = k.exps[var];
    const unsigned log_power = k.logs[var];
    base.exps[var] = 0;
    base.logs[var] = 0;
    for (std::size_t i = 0; i < num_vars_; ++i) base.exps[i] += power * m[i];
    FracExpSum piece(num_vars_);
    piece.add_term(base, c);
    for (unsigned j = 0; j < log_power; ++j) piece = multiply_log_form(piece, m);
    r += piece;
  }
  return r;
}

bool FracExpSum::is_constant() const {
  for (const auto& [k, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (k.exps[i] != 0 || k.logs[i] != 0) return false;
  }
  return true;
}

Rational FracExpSum::constant_value() const {
  if (!is_constant()) throw std::logic_error("FracExpSum is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

double FracExpSum::evaluate(std::span<const double> t) const {
  if (t.size() != num_vars_) throw std::invalid_argument("FracExpSum::evaluate: dimension mismatch");
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double v = c.get_d();
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (k.exps[i] != 0) v *= std::pow(t[i], k.exps[i].get_d());
      if (k.logs[i] != 0) v *= std::pow(std::log(t[i]), static_cast<double>(k.logs[i]));
    }
    total += v;
  }
  return total;
}

std::optional<FracExpSum> integrate_one_var(const FracExpSum& f, std::size_t var,
                                            const IntegrationBound& lower,
                                            const IntegrationBound& upper) {
  const std::size_t n = f.num_vars();
  if (var >= n) throw std::out_of_range("integrate_one_var: variable index out of range");
  if (upper.is_zero) throw std::invalid_argument("integrate_one_var: upper limit must be a monomial");

  // Antiderivative in t_var:
  //   int t^q log^j t = t^{q+1} sum_{i=0}^{j} (-1)^i j!/(j-i)! / (q+1)^{i+1} log^{j-i} t   (q != -1)
  //   int t^{-1} log^j t = log^{j+1} t / (j+1)
  FracExpSum antiderivative(n);
  for (const auto& [k, c] : f.terms()) {
    const Rational& q = k.exps[var];
    const unsigned j = k.logs[var];
    if (q == -1) {
      FracExpSum::Key key = k;
      key.exps[var] = 0;
      key.logs[var] = j + 1;
      antiderivative.add_term(key, c / Rational(j + 1));
      continue;
    }
    const Rational q1 = q + 1;
    Rational falling = 1;  // j!/(j-i)!
    Rational q1_power = q1;
    for (unsigned i = 0; i <= j; ++i) {
      FracExpSum::Key key = k;
      key.exps[var] = q1;
      key.logs[var] = j - i;
      Rational coef = c * falling / q1_power;
      if (i % 2 == 1) coef = -coef;
      antiderivative.add_term(key, coef);
      falling *= Rational(j - i);
      q1_power *= q1;
    }
  }

  FracExpSum result = antiderivative.substitute(var, upper.exps);
  if (lower.is_zero) {
    // t^p log^m t -> 0 as t -> 0 iff p > 0; otherwise the (positive) integrand is not integrable at 0.
    for (const auto& [k, c] : antiderivative.terms())
      if (k.exps[var] <= 0) return std::nullopt;
  } else {
    result -= antiderivative.substitute(var, lower.exps);
  }
  return result;
}

}  // namespace bergman
