#include "lcsenum/branch_finder.hpp"

#include <string>

#include "lcsenum/errors.hpp"

namespace lcsenum {

IndexBuffer greedy_embedding(const MatchView& view, std::span<const Index> p,
                             SpaceMeter* meter) {
  IndexBuffer q{MeteredAllocator<Index>(meter)};
  q.reserve(p.size());
  const Index n = view.len_x();
  for (Index i = 1; i <= n && q.size() < p.size(); ++i) {
    if (view.equal(i, p[q.size()])) q.push_back(i);
  }
  if (q.size() != p.size()) {
    throw ContractViolation("greedy_embedding: Y[p] is not a subsequence of X (matched " +
                            std::to_string(q.size()) + " of " + std::to_string(p.size()) +
                            ")");
  }
  return q;
}

void dec_i(const MatchView& view, BranchState& state) {
  if (state.i_star == 0) throw UsageError("dec_i: i_star is already 0");
  --state.i_star;
  state.j_suffix.extend(view, state.i_star + 1, full_y(view));
}

std::optional<BranchPoint> find_branch(const MatchView& view, std::span<const Index> p,
                                       SpaceMeter* meter) {
  const std::size_t len = p.size();
  const Index len_y = view.len_y();

  BranchState st(meter);
  st.q.reserve(len + 1);
  st.q.push_back(0);
  {
    IndexBuffer embedded = greedy_embedding(view, p, meter);
    st.q.insert(st.q.end(), embedded.begin(), embedded.end());
  }
  st.i_star = view.len_x();

  for (std::size_t k = len; k >= 1; --k) {
    while (st.i_star >= st.q[k]) dec_i(view, st);
    const std::size_t residual = len - k;
    for (Index j_star = p[k - 1] + 1; j_star <= len_y; ++j_star) {
      // Least i in (q[k-1], i_star] with X[i] == Y[j_star].
      Index i = st.q[k - 1] + 1;
      while (i <= st.i_star && !view.equal(i, j_star)) ++i;
      if (i > st.i_star) continue;

      while (st.i_star >= i + 1) dec_i(view, st);
      // L(X[i_star+1 : |X|], Y[j_star+1 : |Y|]) >= residual; vacuous at
      // residual 0.
      if (residual == 0 ||
          (st.j_suffix.size() >= residual && j_star + 1 <= st.j_suffix.level(residual))) {
        return BranchPoint{k, j_star};
      }
      dec_i(view, st);
    }
  }
  return std::nullopt;
}

}  // namespace lcsenum
