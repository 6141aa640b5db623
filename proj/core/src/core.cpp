#include <string>

#include "lcsenum/errors.hpp"
#include "lcsenum/match_view.hpp"
#include "lcsenum/position_sequence.hpp"

namespace lcsenum {

bool char_eq(const MatchView& view, Index i, Index j) {
  if (i < 1 || i > view.len_x() || j < 1 || j > view.len_y()) {
    throw UsageError("char_eq: index (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") outside [1, " + std::to_string(view.len_x()) + "] x [1, " +
                     std::to_string(view.len_y()) + "]");
  }
  return view.equal(i, j);
}

IndexRange IndexRange::make(Index lo, Index hi) {
  if (lo < 1 || lo > hi + 1) {
    throw UsageError("IndexRange: invalid range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return {lo, hi};
}

std::string PositionSequence::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (k > 0) out.push_back(' ');
    out += std::to_string(positions_[k]);
  }
  return out;
}

std::string render(const MatchView& view, const PositionSequence& p) {
  std::string out;
  out.reserve(p.size());
  for (Index j : p) out.push_back(view.y_at(j));
  return out;
}

bool is_valid_position_sequence(const MatchView& view, std::span<const Index> p) {
  Index prev = 0;
  for (Index j : p) {
    if (j <= prev || j > view.len_y()) return false;
    prev = j;
  }
  return true;
}

}  // namespace lcsenum
