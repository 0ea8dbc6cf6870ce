#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "bergman/multi_index.hpp"
#include "bergman/rational.hpp"
#include "bergman/sparse_poly.hpp"

namespace bergman {

/// Per-coordinate inclusive exponent window lo[i] <= alpha_i <= hi[i].
struct Box {
  MultiIndex lo;
  MultiIndex hi;

  Box() = default;
  Box(MultiIndex lo_, MultiIndex hi_);

  std::size_t dim() const { return lo.size(); }
  bool contains(const MultiIndex& alpha) const;
  /// True when alpha is in the box and not on any face.
  bool interior(const MultiIndex& alpha) const;
  std::uint64_t num_points() const;
  /// Visits every lattice point in lexicographic order.
  void for_each(const std::function<void(const MultiIndex&)>& fn) const;
  Box shifted(std::int64_t c) const;
  bool operator==(const Box&) const = default;
};

/// Parses "0:4,-4:4" into a box.
Box parse_box(const std::string& text);

/// Truncated Laurent series: exact coefficients for exponents inside a box.
///
/// Coefficients represent the rational part of the series; the whole chunk
/// carries a common 1/pi^pi_power factor. Any contribution that would land
/// outside the box is dropped and sets the truncated flag.
class LaurentChunk {
 public:
  using TermMap = std::map<MultiIndex, Rational>;

  LaurentChunk() = default;
  explicit LaurentChunk(Box box, unsigned pi_power = 0) : box_(std::move(box)), pi_power_(pi_power) {}

  static LaurentChunk from_poly(const SparsePoly& p, Box box, unsigned pi_power = 0);

  const Box& box() const { return box_; }
  unsigned pi_power() const { return pi_power_; }
  bool truncated() const { return truncated_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const MultiIndex& alpha, const Rational& c);
  Rational coefficient(const MultiIndex& alpha) const;

  LaurentChunk& operator+=(const LaurentChunk& other);
  LaurentChunk& operator-=(const LaurentChunk& other);

  /// Product restricted to `window`; pi powers add.
  LaurentChunk multiply(const LaurentChunk& other, const Box& window) const;

  /// Same terms, restricted to a sub-window (flags truncation if terms are lost).
  LaurentChunk restrict_to(const Box& window) const;

  bool operator==(const LaurentChunk& other) const;

 private:
  Box box_;
  unsigned pi_power_ = 0;
  bool truncated_ = false;
  TermMap terms_;
};

/// One row per lattice point of the box: "alpha_1,...,alpha_n,coef" with a header row.
std::string chunk_to_csv(const LaurentChunk& chunk);
/// {"pi_power":n,"box":{"lo":[..],"hi":[..]},"truncated":false,"terms":[{"exp":[..],"coef":"p/q"},...]}
std::string chunk_to_json(const LaurentChunk& chunk);

}  // namespace bergman
