#pragma once

#include <cstddef>
#include <span>

#include "lcsenum/match_view.hpp"
#include "lcsenum/position_sequence.hpp"
#include "lcsenum/space_meter.hpp"

namespace lcsenum {

enum class Orientation { kPrefix, kSuffix };

// Linear-space stand-in for one row of the LCS table over a y-range
// [j', j''] and some x-part Xp.
//
//   prefix: level(p) = least j with   L(Xp, Y[j':j])  = p   (increasing)
//   suffix: level(q) = greatest j with L(Xp, Y[j:j'']) = q  (decreasing)
//
// size() == L(Xp, Y[j':j'']).
class ThresholdSequence {
 public:
  explicit ThresholdSequence(Orientation orientation, SpaceMeter* meter = nullptr)
      : orientation_(orientation), values_(MeteredAllocator<Index>(meter)) {}

  Orientation orientation() const { return orientation_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // 1-based level.
  Index level(std::size_t l) const { return values_[l - 1]; }
  std::span<const Index> values() const { return values_; }

  // Grows the x-part by X[i]: appended on the right for prefix orientation,
  // prepended on the left for suffix orientation. One pass over yr.
  void extend(const MatchView& view, Index i, IndexRange yr);

  void clear() { values_.clear(); }

 private:
  Orientation orientation_;
  IndexBuffer values_;
};

}  // namespace lcsenum
