#include "lcsenum/reference_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "lcsenum/errors.hpp"

namespace lcsenum::oracle {

DpTable::DpTable(const MatchView& view)
    : rows_(view.len_x() + 1), cols_(view.len_y() + 1), cells_(rows_ * cols_, 0) {
  for (Index i = 1; i < rows_; ++i) {
    for (Index j = 1; j < cols_; ++j) {
      std::size_t& c = cells_[i * cols_ + j];
      if (view.equal(i, j)) {
        c = at(i - 1, j - 1) + 1;
      } else {
        c = std::max(at(i - 1, j), at(i, j - 1));
      }
    }
  }
}

std::size_t lcs_length(const MatchView& view) { return DpTable(view).lcs_length(); }

namespace {

void guard(const MatchView& view, std::size_t max_length, const char* who) {
  if (view.len_x() > max_length || view.len_y() > max_length) {
    throw OracleLimitError(std::string(who) + ": input lengths " +
                           std::to_string(view.len_x()) + "/" + std::to_string(view.len_y()) +
                           " exceed the oracle limit of " + std::to_string(max_length));
  }
}

class Traceback {
 public:
  Traceback(const MatchView& view, const DpTable& dp) : view_(view), dp_(dp) {}

  // All LCS strings of X[1:i], Y[1:j].
  const std::set<std::string>& strings(Index i, Index j) {
    const auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<std::string> out;
    if (i == 0 || j == 0 || dp_.at(i, j) == 0) {
      out.insert(std::string());
    } else if (view_.equal(i, j)) {
      for (const auto& s : strings(i - 1, j - 1)) out.insert(s + view_.y_at(j));
    } else {
      if (dp_.at(i - 1, j) == dp_.at(i, j)) {
        const auto& up = strings(i - 1, j);
        out.insert(up.begin(), up.end());
      }
      if (dp_.at(i, j - 1) == dp_.at(i, j)) {
        const auto& left = strings(i, j - 1);
        out.insert(left.begin(), left.end());
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const MatchView& view_;
  const DpTable& dp_;
  std::map<std::pair<Index, Index>, std::set<std::string>> memo_;
};

// True if Y[positions] is a subsequence of X.
bool embeds_in_x(const MatchView& view, const std::vector<Index>& positions) {
  std::size_t k = 0;
  for (Index i = 1; i <= view.len_x() && k < positions.size(); ++i) {
    if (view.equal(i, positions[k])) ++k;
  }
  return k == positions.size();
}

std::string render_positions(const MatchView& view, const std::vector<Index>& positions) {
  std::string s;
  for (Index j : positions) s.push_back(view.y_at(j));
  return s;
}

}  // namespace

std::vector<Index> leftmost_in_y(const MatchView& view, const std::string& z) {
  std::vector<Index> out;
  Index j = 1;
  for (char c : z) {
    while (j <= view.len_y() && view.y_at(j) != c) ++j;
    if (j > view.len_y()) return {};
    out.push_back(j++);
  }
  return out;
}

std::vector<PositionSequence> all_lcs_position_sequences(const MatchView& view,
                                                         std::size_t max_length) {
  guard(view, max_length, "all_lcs_position_sequences");
  const DpTable dp(view);
  Traceback tb(view, dp);
  std::vector<PositionSequence> out;
  for (const auto& z : tb.strings(view.len_x(), view.len_y())) {
    out.emplace_back(leftmost_in_y(view, z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> all_distinct_lcs_strings(const MatchView& view, std::size_t max_length) {
  std::vector<std::string> out;
  for (const auto& p : all_lcs_position_sequences(view, max_length)) out.push_back(render(view, p));
  return out;
}

std::vector<PositionSequence> exhaustive_lcs_position_sequences(const MatchView& view,
                                                                std::size_t max_length) {
  guard(view, max_length, "exhaustive_lcs_position_sequences");
  const Index m = view.len_y();

  // L by brute force: the largest size for which some subset embeds.
  std::vector<std::vector<Index>> best;
  std::size_t best_len = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Index> positions;
    for (Index j = 1; j <= m; ++j) {
      if (mask & (std::uint64_t{1} << (j - 1))) positions.push_back(j);
    }
    if (positions.size() < best_len || !embeds_in_x(view, positions)) continue;
    if (positions.size() > best_len) {
      best.clear();
      best_len = positions.size();
    }
    best.push_back(std::move(positions));
  }

  std::vector<PositionSequence> out;
  for (const auto& positions : best) {
    if (leftmost_in_y(view, render_positions(view, positions)) == positions) {
      out.emplace_back(positions);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lcsenum::oracle
