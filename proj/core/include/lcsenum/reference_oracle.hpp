#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcsenum/match_view.hpp"
#include "lcsenum/position_sequence.hpp"

namespace lcsenum::oracle {

// Full (len_x + 1) x (len_y + 1) table of prefix LCS lengths.
class DpTable {
 public:
  explicit DpTable(const MatchView& view);

  std::size_t at(Index i, Index j) const { return cells_[i * (cols_) + j]; }
  std::size_t lcs_length() const { return at(rows_ - 1, cols_ - 1); }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }

 private:
  Index rows_;
  Index cols_;
  std::vector<std::size_t> cells_;
};

inline constexpr std::size_t kDefaultMaxLength = 16;
inline constexpr std::size_t kExhaustiveMaxLength = 20;

std::size_t lcs_length(const MatchView& view);

// Every distinct LCS as its leftmost position sequence in Y, sorted. Built by
// memoized traceback over DpTable. Exponential in the worst case; refuses
// (OracleLimitError) when either length exceeds max_length.
std::vector<PositionSequence> all_lcs_position_sequences(
    const MatchView& view, std::size_t max_length = kDefaultMaxLength);

// The same list rendered as strings (same order).
std::vector<std::string> all_distinct_lcs_strings(const MatchView& view,
                                                  std::size_t max_length = kDefaultMaxLength);

// Independent second route: tries every length-L index subset of Y, keeps
// those that embed into X and are their own leftmost representative.
// Only for tiny inputs.
std::vector<PositionSequence> exhaustive_lcs_position_sequences(
    const MatchView& view, std::size_t max_length = kExhaustiveMaxLength);

// Leftmost positions of string z in Y, or an empty result if z is not a
// subsequence of Y. Uses only y_at().
std::vector<Index> leftmost_in_y(const MatchView& view, const std::string& z);

}  // namespace lcsenum::oracle
