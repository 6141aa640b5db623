#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "lcsenum/first_lcs.hpp"
#include "lcsenum/match_view.hpp"
#include "lcsenum/reference_oracle.hpp"
#include "lcsenum/space_meter.hpp"
#include "support/test_oracles.hpp"

namespace lcsenum {
namespace {

using testing::kPaperX;
using testing::kPaperY;

TEST(FirstLcs, PaperExample) {
  const StringView v(kPaperX, kPaperY);
  EXPECT_EQ(first_lcs(v, full_x(v), full_y(v)), (PositionSequence{1, 2, 3, 4, 5}));
}

TEST(FirstLcs, SingleCharacterBaseCase) {
  const StringView v(kPaperX, kPaperY);
  EXPECT_EQ(first_lcs(v, {1, 1}, {1, 11}), (PositionSequence{2}));
  const StringView w("z", "abc");
  EXPECT_TRUE(first_lcs(w, {1, 1}, {1, 3}).empty());
}

TEST(FirstLcs, DisjointAlphabetsAndEmptyRanges) {
  const StringView v("abab", "cdcdc");
  EXPECT_TRUE(first_lcs(v, full_x(v), full_y(v)).empty());
  const StringView w("abc", "abc");
  EXPECT_TRUE(first_lcs(w, {1, 0}, {1, 3}).empty());
  EXPECT_TRUE(first_lcs(w, {1, 3}, {2, 1}).empty());
}

TEST(FirstLcs, SubrangesUseAbsoluteIndices) {
  const StringView v("xxab", "zzzab");
  EXPECT_EQ(first_lcs(v, {3, 4}, {4, 5}), (PositionSequence{4, 5}));
}

TEST(FirstLcs, MatchesOracleAndDominatesEveryLcs) {
  const auto corpus = testing::random_corpus(101, 900, 1, 12, {1, 2, 4});
  for (const auto& inst : corpus) {
    const StringView v(inst.x, inst.y);
    const auto all = oracle::all_lcs_position_sequences(v);
    const PositionSequence first = first_lcs(v, full_x(v), full_y(v));
    ASSERT_EQ(first, all.front()) << inst.x << " " << inst.y;
    for (const auto& p : all) {
      for (std::size_t k = 0; k < p.size(); ++k) ASSERT_LE(first[k], p[k]);
    }
  }
}

// Lowering any single position to a smaller admissible index must break the
// result: either it stops being a common subsequence, or it is not an LCS.
TEST(FirstLcs, NoPositionCanMoveLeft) {
  const auto corpus = testing::random_corpus(7, 300, 1, 10, {2, 4});
  for (const auto& inst : corpus) {
    const StringView v(inst.x, inst.y);
    const PositionSequence p = first_lcs(v, full_x(v), full_y(v));
    const std::size_t len = testing::dp_lcs(inst.x, inst.y);
    ASSERT_EQ(p.size(), len);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const Index floor = k == 0 ? 1 : p[k - 1] + 1;
      for (Index j = floor; j < p[k]; ++j) {
        std::vector<Index> moved(p.begin(), p.end());
        moved[k] = j;
        std::string z;
        for (Index t : moved) z.push_back(inst.y[t - 1]);
        // A common z would be an LCS whose leftmost form sorts before p (or
        // p itself would not be leftmost).
        ASSERT_FALSE(testing::is_subsequence(z, inst.x)) << inst.x << " " << inst.y;
      }
    }
  }
}

TEST(FirstLcs, QueryCountIsQuadratic) {
  testing::StringGen gen(5);
  for (std::size_t n : {16u, 64u, 200u}) {
    for (std::size_t a : {1u, 2u, 4u, 26u}) {
      const std::string x = gen.make(n, a);
      const std::string y = gen.make(n + 7, a);
      const StringView inner(x, y);
      CountingView v(inner);
      first_lcs(v, full_x(v), full_y(v));
      EXPECT_LE(v.queries(), 4 * x.size() * y.size()) << n << " " << a;
    }
  }
}

TEST(FirstLcs, AuxiliarySpaceTracksLcsLength) {
  testing::StringGen gen(9);
  for (std::size_t n : {8u, 64u, 512u}) {
    for (std::size_t a : {1u, 4u, 64u}) {
      const std::string x = gen.make(n, a);
      const std::string y = gen.make(n, a);
      const StringView v(x, y);
      SpaceMeter meter;
      const auto p = first_lcs(v, full_x(v), full_y(v), &meter);
      EXPECT_EQ(meter.live(), 0u);
      const double log_n = std::ceil(std::log2(static_cast<double>(n))) + 1;
      EXPECT_LE(static_cast<double>(meter.peak()), 16.0 * (p.size() + 1) + 8.0 * log_n)
          << n << " " << a;
    }
  }
}

}  // namespace
}  // namespace lcsenum
