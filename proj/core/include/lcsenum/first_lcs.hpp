#pragma once

#include "lcsenum/match_view.hpp"
#include "lcsenum/position_sequence.hpp"
#include "lcsenum/space_meter.hpp"
#include "lcsenum/thresholds.hpp"

namespace lcsenum {

// Prefix-oriented thresholds of X[xr] against Y[yr]. O(|xr| |yr|) time,
// O(L) cells.
ThresholdSequence prefix_thresholds(const MatchView& view, IndexRange xr, IndexRange yr,
                                    SpaceMeter* meter = nullptr);

// Suffix-oriented thresholds of X[xr] against Y[yr]; x is consumed right to
// left.
ThresholdSequence suffix_thresholds(const MatchView& view, IndexRange xr, IndexRange yr,
                                    SpaceMeter* meter = nullptr);

struct SplitResult {
  Index x_mid = 0;  // X' = X[lo : x_mid], X'' = X[x_mid + 1 : hi]
  Index y_mid = 0;  // may be yr.lo - 1 (empty Y')

  friend bool operator==(const SplitResult&, const SplitResult&) = default;
};

// Midpoint of a divide-and-conquer step. x_mid = floor((lo + hi) / 2); y_mid
// is the least j in [yr.lo - 1, yr.hi] with
//   L(X[xr.lo : x_mid], Y[yr.lo : j]) + L(X[x_mid + 1 : xr.hi], Y[j + 1 : yr.hi])
// equal to L(X[xr], Y[yr]). Requires |xr| >= 2.
SplitResult split_point(const MatchView& view, IndexRange xr, IndexRange yr,
                        SpaceMeter* meter = nullptr);

// Lexicographically first LCS-position sequence of X[xr] and Y[yr], with
// absolute y-indices. Empty ranges yield the empty sequence.
PositionSequence first_lcs(const MatchView& view, IndexRange xr, IndexRange yr,
                           SpaceMeter* meter = nullptr);

// Same, appending to out. Used by the enumerator so the result lands directly
// in its position buffer without a temporary.
void append_first_lcs(const MatchView& view, IndexRange xr, IndexRange yr, IndexBuffer& out,
                      SpaceMeter* meter = nullptr);

// Bookkeeping slots charged per recursive call (xr, yr, x_mid, y_mid).
inline constexpr std::size_t kFirstLcsFrameCells = 6;

}  // namespace lcsenum
