#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bergman {

/// Integer exponent vector (the alpha, beta, k, ell of the kernel formulas).
///
/// Entries are 64-bit with overflow-checked arithmetic; any operation that
/// would overflow throws std::overflow_error. The length is fixed at
/// construction.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  static MultiIndex zeros(std::size_t n) { return MultiIndex(std::vector<std::int64_t>(n, 0)); }
  static MultiIndex constant(std::size_t n, std::int64_t v) {
    return MultiIndex(std::vector<std::int64_t>(n, v));
  }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }
  const std::vector<std::int64_t>& vec() const { return entries_; }

  MultiIndex operator+(const MultiIndex& other) const;
  MultiIndex operator-(const MultiIndex& other) const;
  MultiIndex scaled(std::int64_t c) const;
  /// Adds `c` to every entry; `alpha.shifted(1)` is the beta = alpha + 1 of the norm formulas.
  MultiIndex shifted(std::int64_t c) const;
  /// Copy with entry `i` replaced.
  MultiIndex with(std::size_t i, std::int64_t v) const;
  /// Componentwise product (ell . beta).
  MultiIndex hadamard(const MultiIndex& other) const;

  std::int64_t sum() const;

  auto operator<=>(const MultiIndex&) const = default;
  bool operator==(const MultiIndex&) const = default;

  /// "(1,-1)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// Parses a comma-separated integer list such as "1,-2,-3".
MultiIndex parse_multi_index(const std::string& csv);

}  // namespace bergman
