#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lcsenum/match_view.hpp"

namespace lcsenum {

// Strictly increasing 1-based positions into Y. Y[p] spells one LCS.
// Storage is a plain vector; element 0 holds the first position.
// Ordering is lexicographic, which is the enumeration order.
class PositionSequence {
 public:
  PositionSequence() = default;
  PositionSequence(std::initializer_list<Index> positions) : positions_(positions) {}
  explicit PositionSequence(std::vector<Index> positions) : positions_(std::move(positions)) {}
  template <typename It>
  PositionSequence(It first, It last) : positions_(first, last) {}

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  Index operator[](std::size_t k) const { return positions_[k]; }
  Index front() const { return positions_.front(); }
  Index back() const { return positions_.back(); }
  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }

  std::span<const Index> positions() const { return positions_; }
  const std::vector<Index>& vector() const { return positions_; }

  // "1 2 3 4 5"
  std::string to_string() const;

  friend auto operator<=>(const PositionSequence&, const PositionSequence&) = default;
  friend bool operator==(const PositionSequence&, const PositionSequence&) = default;

 private:
  std::vector<Index> positions_;
};

// Inclusive 1-based range [lo, hi]; hi == lo - 1 is the empty range.
struct IndexRange {
  Index lo = 1;
  Index hi = 0;

  // Throws UsageError unless lo >= 1 and lo <= hi + 1.
  static IndexRange make(Index lo, Index hi);

  std::size_t size() const { return hi + 1 - lo; }
  bool empty() const { return hi + 1 == lo; }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

inline IndexRange full_x(const MatchView& view) { return {1, view.len_x()}; }
inline IndexRange full_y(const MatchView& view) { return {1, view.len_y()}; }

// Y[p[1]] Y[p[2]] ... Y[p[|p|]].
std::string render(const MatchView& view, const PositionSequence& p);

// Strictly increasing and every element in [1, len_y].
bool is_valid_position_sequence(const MatchView& view, std::span<const Index> p);
inline bool is_valid_position_sequence(const MatchView& view, const PositionSequence& p) {
  return is_valid_position_sequence(view, p.positions());
}

}  // namespace lcsenum
