#include "bergman/laurent_chunk.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bergman/checked.hpp"

namespace bergman {

Box::Box(MultiIndex lo_, MultiIndex hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw std::invalid_argument("box bounds have different lengths");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("box lower bound exceeds upper bound");
}

bool Box::contains(const MultiIndex& alpha) const {
  if (alpha.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (alpha[i] < lo[i] || alpha[i] > hi[i]) return false;
  return true;
}

bool Box::interior(const MultiIndex& alpha) const {
  if (alpha.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (alpha[i] <= lo[i] || alpha[i] >= hi[i]) return false;
  return true;
}

std::uint64_t Box::num_points() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim(); ++i) count *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
  return count;
}

void Box::for_each(const std::function<void(const MultiIndex&)>& fn) const {
  if (dim() == 0) return;
  std::vector<std::int64_t> cur(lo.vec());
  while (true) {
    fn(MultiIndex(cur));
    std::size_t i = dim();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return;
    }
  }
}

Box Box::shifted(std::int64_t c) const { return Box(lo.shifted(c), hi.shifted(c)); }

Box parse_box(const std::string& text) {
  std::vector<std::int64_t> lo, hi;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("box entry must be lo:hi, got '" + item + "'");
    auto a = parse_multi_index(item.substr(0, colon));
    auto b = parse_multi_index(item.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1) throw std::invalid_argument("box entry must be lo:hi, got '" + item + "'");
    lo.push_back(a[0]);
    hi.push_back(b[0]);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Box(MultiIndex(std::move(lo)), MultiIndex(std::move(hi)));
}

LaurentChunk LaurentChunk::from_poly(const SparsePoly& p, Box box, unsigned pi_power) {
  if (p.num_vars() != box.dim()) throw std::invalid_argument("from_poly: dimension mismatch");
  LaurentChunk chunk(std::move(box), pi_power);
  for (const auto& [e, c] : p.terms()) chunk.add(MultiIndex(e), c);
  return chunk;
}

void LaurentChunk::add(const MultiIndex& alpha, const Rational& c) {
  if (c == 0) return;
  if (!box_.contains(alpha)) {
    truncated_ = true;
    return;
  }
  Rational v = c;
  if (v.get_den() != 1) v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(alpha, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentChunk::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentChunk& LaurentChunk::operator+=(const LaurentChunk& other) {
  if (other.pi_power_ != pi_power_) throw std::invalid_argument("adding chunks with different pi powers");
  for (const auto& [a, c] : other.terms_) add(a, c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

LaurentChunk& LaurentChunk::operator-=(const LaurentChunk& other) {
  if (other.pi_power_ != pi_power_) throw std::invalid_argument("subtracting chunks with different pi powers");
  for (const auto& [a, c] : other.terms_) add(a, -c);
  truncated_ = truncated_ || other.truncated_;
  return *this;
}

LaurentChunk LaurentChunk::multiply(const LaurentChunk& other, const Box& window) const {
  if (other.box_.dim() != box_.dim() || window.dim() != box_.dim())
    throw std::invalid_argument("multiply: dimension mismatch");
  LaurentChunk r(window, pi_power_ + other.pi_power_);
  std::vector<std::int64_t> e(box_.dim());
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::add(a[i], b[i]);
      r.add(MultiIndex(e), ca * cb);
    }
  }
  r.truncated_ = r.truncated_ || truncated_ || other.truncated_;
  return r;
}

LaurentChunk LaurentChunk::restrict_to(const Box& window) const {
  LaurentChunk r(window, pi_power_);
  for (const auto& [a, c] : terms_) r.add(a, c);
  r.truncated_ = r.truncated_ || truncated_;
  return r;
}

bool LaurentChunk::operator==(const LaurentChunk& other) const {
  return box_ == other.box_ && pi_power_ == other.pi_power_ && terms_ == other.terms_;
}

std::string chunk_to_csv(const LaurentChunk& chunk) {
  std::ostringstream os;
  const auto& box = chunk.box();
  for (std::size_t i = 0; i < box.dim(); ++i) os << "alpha_" << (i + 1) << ",";
  os << "coef_times_pi^" << chunk.pi_power() << "\n";
  box.for_each([&](const MultiIndex& alpha) {
    for (auto v : alpha.entries()) os << v << ",";
    os << chunk.coefficient(alpha).get_str() << "\n";
  });
  return os.str();
}

std::string chunk_to_json(const LaurentChunk& chunk) {
  nlohmann::ordered_json j;
  j["pi_power"] = chunk.pi_power();
  j["box"] = {{"lo", chunk.box().lo.vec()}, {"hi", chunk.box().hi.vec()}};
  j["truncated"] = chunk.truncated();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [alpha, c] : chunk.terms()) terms.push_back({{"exp", alpha.vec()}, {"coef", c.get_str()}});
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace bergman
