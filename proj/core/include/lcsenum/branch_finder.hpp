#pragma once

#include <optional>
#include <span>

#include "lcsenum/match_view.hpp"
#include "lcsenum/position_sequence.hpp"
#include "lcsenum/space_meter.hpp"
#include "lcsenum/thresholds.hpp"

namespace lcsenum {

// Where the successor of P departs from P: successor[1 : k_star] =
// P[1 : k_star - 1] followed by j_star. k_star is 1-based.
struct BranchPoint {
  std::size_t k_star = 0;
  Index j_star = 0;

  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

// Working state of one branch search.
//
// q[k] (k >= 1) is the end of the shortest prefix of X containing Y[P[1:k]];
// q[0] = 0 is a sentinel. j_suffix holds suffix thresholds of
// X[i_star + 1 : |X|] against all of Y.
struct BranchState {
  explicit BranchState(SpaceMeter* meter = nullptr)
      : q(MeteredAllocator<Index>(meter)), j_suffix(Orientation::kSuffix, meter) {}

  IndexBuffer q;
  Index i_star = 0;
  ThresholdSequence j_suffix;
};

// Leftmost embedding of Y[p] into X: element k - 1 is the x-index matched to
// p[k]. Throws ContractViolation if Y[p] is not a subsequence of X.
IndexBuffer greedy_embedding(const MatchView& view, std::span<const Index> p,
                             SpaceMeter* meter = nullptr);
inline IndexBuffer greedy_embedding(const MatchView& view, const PositionSequence& p,
                                    SpaceMeter* meter = nullptr) {
  return greedy_embedding(view, p.positions(), meter);
}

// Moves i_star one step left and folds X[old i_star] into j_suffix. One pass
// over Y. Requires i_star >= 1.
void dec_i(const MatchView& view, BranchState& state);

// Branch point of p within the lexicographic list of LCS-position sequences
// of X and Y, or nullopt if p is the last one. p must itself be an element of
// that list. O(|X| |Y|) time, O(L) cells.
std::optional<BranchPoint> find_branch(const MatchView& view, std::span<const Index> p,
                                       SpaceMeter* meter = nullptr);
inline std::optional<BranchPoint> find_branch(const MatchView& view, const PositionSequence& p,
                                              SpaceMeter* meter = nullptr) {
  return find_branch(view, p.positions(), meter);
}

}  // namespace lcsenum
