#include "bergman/multi_index.hpp"

#include <sstream>
#include <stdexcept>

#include "bergman/checked.hpp"

namespace bergman {

namespace {

void require_same_size(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
}

}  // namespace

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  require_same_size(*this, other);
  std::vector<std::int64_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::add(entries_[i], other.entries_[i]);
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  require_same_size(*this, other);
  std::vector<std::int64_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::sub(entries_[i], other.entries_[i]);
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::scaled(std::int64_t c) const {
  std::vector<std::int64_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::mul(entries_[i], c);
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::shifted(std::int64_t c) const {
  std::vector<std::int64_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::add(entries_[i], c);
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::with(std::size_t i, std::int64_t v) const {
  if (i >= size()) throw std::out_of_range("multi-index position out of range");
  auto r = entries_;
  r[i] = v;
  return MultiIndex(std::move(r));
}

MultiIndex MultiIndex::hadamard(const MultiIndex& other) const {
  require_same_size(*this, other);
  std::vector<std::int64_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked::mul(entries_[i], other.entries_[i]);
  return MultiIndex(std::move(r));
}

std::int64_t MultiIndex::sum() const {
  std::int64_t s = 0;
  for (auto v : entries_) s = checked::add(s, v);
  return s;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ')';
  return os.str();
}

MultiIndex parse_multi_index(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  if (csv.empty()) throw std::invalid_argument("empty integer list");
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    std::string item = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MultiIndex(std::move(out));
}

}  // namespace bergman
