#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "lcsenum/branch_finder.hpp"
#include "lcsenum/match_view.hpp"
#include "lcsenum/position_sequence.hpp"
#include "lcsenum/space_meter.hpp"

namespace lcsenum {

struct InstrumentationCounters {
  // Equality queries since the previous output (or since start).
  std::uint64_t eq_queries_this_delay = 0;
  // Largest completed gap, including the gap after the last output.
  std::uint64_t max_delay_queries = 0;
  std::uint64_t total_eq_queries = 0;
  // Number of completed gaps (outputs, plus one once finished).
  std::uint64_t gaps = 0;
  std::size_t peak_aux_cells = 0;
  std::uint64_t outputs_emitted = 0;
};

// Streams every distinct LCS of X and Y, each as its leftmost position
// sequence in Y, in lexicographic order of those sequences. Work between two
// outputs is O(|X| |Y|) equality queries; auxiliary storage is O(L) index
// cells plus O(log |X|) recursion slots.
//
// When L(X, Y) = 0 a single empty sequence is produced.
//
// The view must outlive the enumerator. Single owner; not thread-safe.
class LcsEnumerator {
 public:
  // Throws UsageError if X or Y is empty.
  explicit LcsEnumerator(const MatchView& view);

  LcsEnumerator(const LcsEnumerator&) = delete;
  LcsEnumerator& operator=(const LcsEnumerator&) = delete;

  // Next sequence, or nullopt once exhausted (and on every later call).
  std::optional<PositionSequence> next();

  bool finished() const { return finished_; }
  // Snapshot; eq_queries_this_delay reflects work done since the last output.
  InstrumentationCounters counters() const;

  // Current branch index (0 before the first output).
  std::size_t k_star() const { return k_star_; }

 private:
  void close_gap();
  void refresh_branch();

  CountingView view_;
  SpaceMeter meter_;
  IndexBuffer p_;
  std::size_t k_star_ = 0;
  bool branch_pending_ = false;
  bool finished_ = false;
  InstrumentationCounters counters_;
};

using Sink = std::function<void(const PositionSequence&)>;

// Drives an LcsEnumerator to exhaustion, handing each output to sink.
// Returns the number of outputs. Exceptions from sink propagate.
std::uint64_t enumerate_all(const MatchView& view, const Sink& sink);

}  // namespace lcsenum
