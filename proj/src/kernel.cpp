#include "bergman/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "bergman/combinatorics.hpp"

namespace bergman {

Rational RationalKernel::prefactor() const { return scalar_num / Rational(L_divisor); }

bool RationalKernel::operator==(const RationalKernel& other) const {
  if (pi_power != other.pi_power || !(denom_main == other.denom_main) || denom_units != other.denom_units)
    return false;
  return numerator * prefactor() == other.numerator * other.prefactor();
}

bool RationalKernel::identical(const RationalKernel& other) const {
  return scalar_num == other.scalar_num && pi_power == other.pi_power && L_divisor == other.L_divisor &&
         numerator == other.numerator && denom_main == other.denom_main && denom_units == other.denom_units;
}

namespace {

RationalKernel sig1_shell(std::size_t n, std::int64_t k1, std::vector<std::int64_t> kb) {
  RationalKernel kernel;
  kernel.pi_power = static_cast<unsigned>(n);
  kernel.numerator = SparsePoly(n);
  kernel.denom_main = {k1, std::move(kb)};
  for (std::size_t b = 1; b < n; ++b) kernel.denom_units.push_back({b, 2});
  return kernel;
}

}  // namespace

RationalKernel kernel_signature_one(const DomainSpec& spec) {
  if (spec.s != 1)
    throw DomainError("closed-form kernel needs signature 1, got signature " + std::to_string(spec.s));
  const auto k = spec.abs_k();
  RationalKernel kernel = sig1_shell(spec.n, k[0], std::vector<std::int64_t>(k.vec().begin() + 1, k.vec().end()));
  kernel.L_divisor = spec.L;
  for (const auto& beta : index_set(spec, IndexSetVariant::G).members) {
    Integer c = coefficient_C(beta, spec);
    if (c != 0) kernel.numerator.add_term(beta.vec(), Rational(c));
  }
  return kernel;
}

RationalKernel kernel_model_sig1(std::size_t n) {
  if (n < 2) throw DomainError("kernel_model_sig1: n must be at least 2");
  RationalKernel kernel = sig1_shell(n, 1, std::vector<std::int64_t>(n - 1, 1));
  std::vector<std::int64_t> e(n, 1);
  e[0] = 0;
  kernel.numerator.add_term(e, 1);
  return kernel;
}

RationalKernel kernel_fat_hartogs(std::int64_t k) {
  if (k < 1) throw DomainError("kernel_fat_hartogs: k must be at least 1");
  RationalKernel kernel = sig1_shell(2, 1, {k});
  kernel.numerator.add_term({0, k}, 1);
  return kernel;
}

RationalKernel kernel_thin_hartogs(std::int64_t k) {
  if (k < 2) throw DomainError("kernel_thin_hartogs: k must be at least 2");
  RationalKernel kernel = sig1_shell(2, k, {1});
  kernel.L_divisor = to_integer(k);
  auto& p = kernel.numerator;
  auto sq = [](std::int64_t v) { return Rational(to_integer(v * v)); };
  // t_2^0:  (sum_{l=1}^{k-1} (k-l) l t_1^{l-1}) t_1^k
  for (std::int64_t l = 1; l <= k - 1; ++l) p.add_term({l - 1 + k, 0}, Rational(to_integer((k - l) * l)));
  // t_2^1:  sum_{l=1}^{k} (l^2 + (k-l)^2 t_1^k) t_1^{l-1}
  for (std::int64_t l = 1; l <= k; ++l) {
    p.add_term({l - 1, 1}, sq(l));
    p.add_term({k + l - 1, 1}, sq(k - l));
  }
  // t_2^2:  sum_{l=1}^{k} l (k-l) t_1^{l-1}
  for (std::int64_t l = 1; l <= k; ++l) p.add_term({l - 1, 2}, Rational(to_integer(l * (k - l))));
  return kernel;
}

RationalKernel reduce_content(const RationalKernel& kernel) {
  RationalKernel out = kernel;
  if (kernel.numerator.is_zero()) return out;
  Integer g = 0, l = 1;
  for (const auto& [e, c] : kernel.numerator.terms()) {
    g = gcd(g, c.get_num());
    l = lcm(l, c.get_den());
  }
  Rational content(g, l);
  content.canonicalize();
  out.numerator *= 1 / content;
  const Rational pre = kernel.prefactor() * content;
  out.scalar_num = pre.get_num();
  out.L_divisor = pre.get_den();
  return out;
}

namespace {

using cd = std::complex<double>;

cd ipow(cd base, std::int64_t e) {
  cd result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace

std::complex<double> evaluate_kernel_t(const RationalKernel& kernel, std::span<const std::complex<double>> t,
                                       const EvalOptions& options) {
  const std::size_t n = kernel.dim();
  if (t.size() != n) throw std::invalid_argument("evaluate_kernel: dimension mismatch");
  cd num = 0.0;
  for (const auto& [e, c] : kernel.numerator.terms()) {
    cd m = c.get_d();
    for (std::size_t a = 0; a < n; ++a)
      if (e[a] != 0) m *= ipow(t[a], e[a]);
    num += m;
  }
  cd prod = 1.0;
  for (std::size_t b = 1; b < n; ++b) prod *= ipow(t[b], kernel.denom_main.kb[b - 1]);
  const cd head = ipow(t[0], kernel.denom_main.k1);
  const cd main = prod - head;
  const double tol = options.singular_tolerance;
  bool singular = !(std::abs(main) > tol * (std::abs(prod) + std::abs(head)));
  cd den = main * main;
  for (const auto& u : kernel.denom_units) {
    const cd f = 1.0 - t[u.var];
    singular |= !(std::abs(f) > tol);
    den *= ipow(f, u.multiplicity);
  }
  if (singular || den == 0.0) throw SingularEvaluation("kernel denominator vanishes to working precision");
  const double pre = kernel.prefactor().get_d() / std::pow(std::numbers::pi, static_cast<double>(kernel.pi_power));
  return pre * num / den;
}

std::complex<double> evaluate_kernel(const RationalKernel& kernel, std::span<const std::complex<double>> z,
                                     std::span<const std::complex<double>> w, const EvalOptions& options) {
  if (z.size() != kernel.dim() || w.size() != kernel.dim())
    throw std::invalid_argument("evaluate_kernel: dimension mismatch");
  std::vector<cd> t(z.size());
  for (std::size_t a = 0; a < z.size(); ++a) t[a] = z[a] * std::conj(w[a]);
  return evaluate_kernel_t(kernel, t, options);
}

namespace {

std::string superscript(std::int64_t v) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string digits_str = std::to_string(v < 0 ? -v : v);
  std::string out = v < 0 ? "⁻" : "";
  for (char c : digits_str) out += digits[c - '0'];
  return out;
}

std::string plain_power(std::size_t var, std::int64_t e) {
  std::string s = "t" + std::to_string(var + 1);
  if (e != 1) s += superscript(e);
  return s;
}

std::string latex_power(std::size_t var, std::int64_t e) {
  std::string s = "t_{" + std::to_string(var + 1) + "}";
  if (e != 1) s += "^{" + std::to_string(e) + "}";
  return s;
}

template <class PowerFn>
std::string render_monomial(const SparsePoly::Exponent& e, PowerFn power, const std::string& sep) {
  std::string s;
  for (std::size_t a = 0; a < e.size(); ++a) {
    if (e[a] == 0) continue;
    if (!s.empty()) s += sep;
    s += power(a, e[a]);
  }
  return s;
}

template <class PowerFn>
std::string render_poly(const SparsePoly& p, PowerFn power, const std::string& sep, const std::string& minus,
                        bool* multi_term) {
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) s += minus;
    } else {
      s += c < 0 ? " " + minus + " " : " + ";
    }
    first = false;
    std::string mono = render_monomial(e, power, sep);
    if (mono.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + sep;
      s += mono;
    }
  }
  if (multi_term) *multi_term = p.size() > 1;
  return s.empty() ? "0" : s;
}

SparsePoly::Exponent main_product_exponent(const RationalKernel& kernel) {
  SparsePoly::Exponent e(kernel.dim(), 0);
  for (std::size_t b = 1; b < kernel.dim(); ++b) e[b] = kernel.denom_main.kb[b - 1];
  return e;
}

}  // namespace

std::string kernel_to_plain(const RationalKernel& kernel) {
  const Rational pre = kernel.prefactor();
  const std::string pi = "π" + superscript(kernel.pi_power);
  std::string scalar;
  if (pre.get_den() == 1)
    scalar = pre.get_num().get_str() + "/" + pi;
  else
    scalar = pre.get_num().get_str() + "/(" + pre.get_den().get_str() + pi + ")";

  bool multi = false;
  std::string num = render_poly(kernel.numerator, plain_power, " ", "−", &multi);
  if (multi) num = "(" + num + ")";

  std::string den = "(" + render_monomial(main_product_exponent(kernel), plain_power, " ") + " − " +
                    plain_power(0, kernel.denom_main.k1) + ")²";
  for (const auto& u : kernel.denom_units)
    den += " (1 − t" + std::to_string(u.var + 1) + ")" + superscript(u.multiplicity);
  return scalar + " · " + num + " / (" + den + ")";
}

std::string kernel_to_latex(const RationalKernel& kernel) {
  const Rational pre = kernel.prefactor();
  std::ostringstream os;
  os << "\\frac{" << pre.get_num().get_str() << "}{";
  if (pre.get_den() != 1) os << pre.get_den().get_str();
  os << "\\pi^{" << kernel.pi_power << "}} \\cdot \\frac{"
     << render_poly(kernel.numerator, latex_power, " ", "-", nullptr) << "}{\\left("
     << render_monomial(main_product_exponent(kernel), latex_power, " ") << " - "
     << latex_power(0, kernel.denom_main.k1) << "\\right)^{2}";
  for (const auto& u : kernel.denom_units)
    os << " \\left(1 - t_{" << (u.var + 1) << "}\\right)^{" << u.multiplicity << "}";
  os << "}";
  return os.str();
}

std::string kernel_to_json(const RationalKernel& kernel) {
  nlohmann::ordered_json j;
  j["pi_power"] = kernel.pi_power;
  if (kernel.L_divisor.fits_slong_p())
    j["L"] = kernel.L_divisor.get_si();
  else
    j["L"] = kernel.L_divisor.get_str();
  if (kernel.scalar_num != 1) j["scalar_num"] = kernel.scalar_num.get_str();
  auto num = nlohmann::ordered_json::array();
  for (const auto& [e, c] : kernel.numerator.terms()) num.push_back({{"exp", e}, {"coef", c.get_str()}});
  j["numerator"] = std::move(num);
  j["denom_main"] = {{"k1", kernel.denom_main.k1}, {"kb", kernel.denom_main.kb}};
  auto units = nlohmann::ordered_json::array();
  for (const auto& u : kernel.denom_units) units.push_back({{"var", u.var + 1}, {"mult", u.multiplicity}});
  j["denom_units"] = std::move(units);
  return j.dump();
}

}  // namespace bergman
