#include "lcsenum/thresholds.hpp"

namespace lcsenum {

namespace {

// l counts the old levels strictly on the far side of j from the scan start;
// a match at j can then lift level l + 1 to j. Writes only touch index l + 1
// and l never grows, so the reads of values[l] still see old entries.
inline void put(IndexBuffer& values, std::size_t l, Index j) {
  if (l == values.size()) {
    values.push_back(j);
  } else {
    values[l] = j;
  }
}

}  // namespace

void ThresholdSequence::extend(const MatchView& view, Index i, IndexRange yr) {
  if (yr.empty()) return;
  std::size_t l = values_.size();
  if (orientation_ == Orientation::kPrefix) {
    for (Index j = yr.hi; j >= yr.lo; --j) {
      if (l > 0 && values_[l - 1] == j) --l;
      if (view.equal(i, j)) put(values_, l, j);
    }
  } else {
    for (Index j = yr.lo; j <= yr.hi; ++j) {
      if (l > 0 && values_[l - 1] == j) --l;
      if (view.equal(i, j)) put(values_, l, j);
    }
  }
}

}  // namespace lcsenum
