#include "lcsenum/enumerator.hpp"

#include <algorithm>

#include "lcsenum/errors.hpp"
#include "lcsenum/first_lcs.hpp"

namespace lcsenum {

LcsEnumerator::LcsEnumerator(const MatchView& view)
    : view_(view), p_(MeteredAllocator<Index>(&meter_)) {
  if (view.len_x() == 0 || view.len_y() == 0) {
    throw UsageError("LcsEnumerator: both input sequences must be non-empty");
  }
}

void LcsEnumerator::close_gap() {
  const std::uint64_t delay = view_.queries();
  view_.reset();
  counters_.eq_queries_this_delay = 0;
  counters_.max_delay_queries = std::max(counters_.max_delay_queries, delay);
  counters_.total_eq_queries += delay;
  ++counters_.gaps;
  counters_.peak_aux_cells = std::max(counters_.peak_aux_cells, meter_.peak());
}

InstrumentationCounters LcsEnumerator::counters() const {
  InstrumentationCounters c = counters_;
  c.eq_queries_this_delay = view_.queries();
  c.peak_aux_cells = std::max(c.peak_aux_cells, meter_.peak());
  return c;
}

void LcsEnumerator::refresh_branch() {
  const auto branch = find_branch(view_, std::span<const Index>(p_), &meter_);
  if (!branch) {
    finished_ = true;
    return;
  }
  k_star_ = branch->k_star;
  p_[k_star_ - 1] = branch->j_star;
}

std::optional<PositionSequence> LcsEnumerator::next() {
  if (finished_) return std::nullopt;
  if (branch_pending_) {
    branch_pending_ = false;
    refresh_branch();
    if (finished_) {
      close_gap();
      return std::nullopt;
    }
  }

  // Shortest prefixes X[1:i], Y[1:j] holding Y[p[1 : k_star]]. Stored
  // positions are leftmost in Y, so j is simply p[k_star].
  Index i = 0;
  const Index len_x = view_.len_x();
  for (std::size_t t = 0; t < k_star_; ++t) {
    do {
      ++i;
    } while (i <= len_x && !view_.equal(i, p_[t]));
    if (i > len_x) throw ContractViolation("LcsEnumerator: branch prefix does not embed in X");
  }
  const Index j = k_star_ == 0 ? 0 : p_[k_star_ - 1];

  p_.resize(k_star_);
  append_first_lcs(view_, {i + 1, len_x}, {j + 1, view_.len_y()}, p_, &meter_);

  PositionSequence out(p_.begin(), p_.end());
  close_gap();
  ++counters_.outputs_emitted;
  branch_pending_ = true;
  return out;
}

std::uint64_t enumerate_all(const MatchView& view, const Sink& sink) {
  LcsEnumerator e(view);
  std::uint64_t count = 0;
  while (auto p = e.next()) {
    sink(*p);
    ++count;
  }
  return count;
}

}  // namespace lcsenum
