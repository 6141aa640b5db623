#include "lcsenum/first_lcs.hpp"

#include <string>

#include "lcsenum/errors.hpp"

namespace lcsenum {

ThresholdSequence prefix_thresholds(const MatchView& view, IndexRange xr, IndexRange yr,
                                    SpaceMeter* meter) {
  ThresholdSequence t(Orientation::kPrefix, meter);
  if (yr.empty()) return t;
  for (Index i = xr.lo; i <= xr.hi; ++i) t.extend(view, i, yr);
  return t;
}

ThresholdSequence suffix_thresholds(const MatchView& view, IndexRange xr, IndexRange yr,
                                    SpaceMeter* meter) {
  ThresholdSequence t(Orientation::kSuffix, meter);
  if (yr.empty()) return t;
  for (Index i = xr.hi; i >= xr.lo; --i) t.extend(view, i, yr);
  return t;
}

SplitResult split_point(const MatchView& view, IndexRange xr, IndexRange yr,
                        SpaceMeter* meter) {
  if (xr.size() < 2) {
    throw UsageError("split_point: x-range must hold at least two characters, got " +
                     std::to_string(xr.size()));
  }
  const Index x_mid = (xr.lo + xr.hi) / 2;
  const ThresholdSequence left = prefix_thresholds(view, {xr.lo, x_mid}, yr, meter);
  const ThresholdSequence right = suffix_thresholds(view, {x_mid + 1, xr.hi}, yr, meter);

  // l_left = L(X', Y[yr.lo : j]), l_right = L(X'', Y[j + 1 : yr.hi]).
  // A missing next level (l_left == |left|) or an exhausted suffix
  // (l_right == 0) never advances.
  std::size_t l_left = 0;
  std::size_t l_right = right.size();
  std::size_t best = l_left + l_right;
  Index y_mid = yr.lo - 1;
  for (Index j = yr.lo; j <= yr.hi; ++j) {
    if (l_left < left.size() && left.level(l_left + 1) <= j) ++l_left;
    if (l_right > 0 && right.level(l_right) <= j) --l_right;
    if (l_left + l_right > best) {
      best = l_left + l_right;
      y_mid = j;
    }
  }
  return {x_mid, y_mid};
}

namespace {

void first_lcs_into(const MatchView& view, IndexRange xr, IndexRange yr, IndexBuffer& out,
                    SpaceMeter* meter) {
  if (xr.empty() || yr.empty()) return;
  FrameCells frame(meter, kFirstLcsFrameCells);
  if (xr.size() == 1) {
    for (Index j = yr.lo; j <= yr.hi; ++j) {
      if (view.equal(xr.lo, j)) {
        out.push_back(j);
        return;
      }
    }
    return;
  }
  // Thresholds die inside split_point, before either recursive call.
  const SplitResult s = split_point(view, xr, yr, meter);
  first_lcs_into(view, {xr.lo, s.x_mid}, {yr.lo, s.y_mid}, out, meter);
  first_lcs_into(view, {s.x_mid + 1, xr.hi}, {s.y_mid + 1, yr.hi}, out, meter);
}

}  // namespace

void append_first_lcs(const MatchView& view, IndexRange xr, IndexRange yr, IndexBuffer& out,
                      SpaceMeter* meter) {
  first_lcs_into(view, xr, yr, out, meter);
}

PositionSequence first_lcs(const MatchView& view, IndexRange xr, IndexRange yr,
                           SpaceMeter* meter) {
  IndexBuffer out{MeteredAllocator<Index>(meter)};
  first_lcs_into(view, xr, yr, out, meter);
  return PositionSequence(out.begin(), out.end());
}

}  // namespace lcsenum
