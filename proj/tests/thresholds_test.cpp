#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "lcsenum/errors.hpp"
#include "lcsenum/first_lcs.hpp"
#include "lcsenum/match_view.hpp"
#include "support/test_oracles.hpp"

namespace lcsenum {
namespace {

using testing::dp_lcs;
using testing::kPaperX;
using testing::kPaperY;

std::vector<Index> values(const ThresholdSequence& t) {
  return {t.values().begin(), t.values().end()};
}

// Thresholds straight from their definition, via the DP oracle.
std::vector<Index> prefix_oracle(const std::string& x, IndexRange xr, const std::string& y,
                                 IndexRange yr) {
  std::vector<Index> out;
  const std::size_t total = dp_lcs(x, xr.lo, xr.hi, y, yr.lo, yr.hi);
  for (std::size_t p = 1; p <= total; ++p) {
    for (Index j = yr.lo; j <= yr.hi; ++j) {
      if (dp_lcs(x, xr.lo, xr.hi, y, yr.lo, j) == p) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

std::vector<Index> suffix_oracle(const std::string& x, IndexRange xr, const std::string& y,
                                 IndexRange yr) {
  std::vector<Index> out;
  const std::size_t total = dp_lcs(x, xr.lo, xr.hi, y, yr.lo, yr.hi);
  for (std::size_t q = 1; q <= total; ++q) {
    for (Index j = yr.hi; j >= yr.lo; --j) {
      if (dp_lcs(x, xr.lo, xr.hi, y, j, yr.hi) == q) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

TEST(PrefixThresholds, PaperExample) {
  const StringView v(kPaperX, kPaperY);
  EXPECT_EQ(values(prefix_thresholds(v, {1, 6}, {1, 11})), (std::vector<Index>{1, 2, 6, 8, 11}));
  EXPECT_EQ(values(prefix_thresholds(v, {1, 1}, {1, 11})), (std::vector<Index>{2}));
  EXPECT_TRUE(prefix_thresholds(v, {1, 0}, {1, 11}).empty());
}

TEST(SuffixThresholds, PaperExample) {
  const StringView v(kPaperX, kPaperY);
  EXPECT_EQ(values(suffix_thresholds(v, {7, 11}, {1, 11})), (std::vector<Index>{10, 7, 4, 2}));
  EXPECT_TRUE(suffix_thresholds(v, {7, 6}, {1, 11}).empty());
  EXPECT_TRUE(suffix_thresholds(v, {1, 11}, {4, 3}).empty());
}

TEST(Thresholds, MatchDefinitionOnRandomSubranges) {
  testing::StringGen gen(17);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t a = std::vector<std::size_t>{1, 2, 4, 8}[trial % 4];
    const std::string x = gen.make(gen.uniform(1, 12), a);
    const std::string y = gen.make(gen.uniform(1, 12), a);
    const StringView v(x, y);
    const Index xlo = gen.uniform(1, x.size());
    const Index xhi = gen.uniform(xlo - 1, x.size());
    const Index ylo = gen.uniform(1, y.size());
    const Index yhi = gen.uniform(ylo - 1, y.size());
    const IndexRange xr{xlo, xhi}, yr{ylo, yhi};

    const auto pre = values(prefix_thresholds(v, xr, yr));
    const auto suf = values(suffix_thresholds(v, xr, yr));
    ASSERT_EQ(pre, prefix_oracle(x, xr, y, yr)) << x << " " << y;
    ASSERT_EQ(suf, suffix_oracle(x, xr, y, yr)) << x << " " << y;
    for (std::size_t k = 1; k < pre.size(); ++k) ASSERT_LT(pre[k - 1], pre[k]);
    for (std::size_t k = 1; k < suf.size(); ++k) ASSERT_GT(suf[k - 1], suf[k]);
  }
}

TEST(SplitPoint, PaperExample) {
  const StringView v(kPaperX, kPaperY);
  EXPECT_EQ(split_point(v, {1, 11}, {1, 11}), (SplitResult{6, 1}));
}

TEST(SplitPoint, NoCommonCharactersKeepsEmptyLeftPart) {
  const StringView v("ab", "xyz");
  EXPECT_EQ(split_point(v, {1, 2}, {1, 3}), (SplitResult{1, 0}));
  const StringView w("abcd", "zzxyz");
  EXPECT_EQ(split_point(w, {1, 2}, {3, 5}), (SplitResult{1, 2}));
}

TEST(SplitPoint, RequiresTwoCharacters) {
  const StringView v("ab", "ab");
  EXPECT_THROW(split_point(v, {1, 1}, {1, 2}), UsageError);
}

TEST(SplitPoint, LeastMaximizerAgainstExhaustiveScan) {
  testing::StringGen gen(23);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t a = std::vector<std::size_t>{1, 2, 4, 8}[trial % 4];
    const std::string x = gen.make(gen.uniform(2, 12), a);
    const std::string y = gen.make(gen.uniform(1, 12), a);
    const StringView v(x, y);
    const Index xlo = gen.uniform(1, x.size() - 1);
    const Index xhi = gen.uniform(xlo + 1, x.size());
    const Index ylo = gen.uniform(1, y.size());
    const Index yhi = gen.uniform(ylo - 1, y.size());

    const SplitResult s = split_point(v, {xlo, xhi}, {ylo, yhi});
    const Index mid = (xlo + xhi) / 2;
    ASSERT_EQ(s.x_mid, mid);

    const std::size_t total = dp_lcs(x, xlo, xhi, y, ylo, yhi);
    Index least = yhi + 1;
    for (Index j = ylo - 1; j <= yhi; ++j) {
      const std::size_t sum = dp_lcs(x, xlo, mid, y, ylo, j) + dp_lcs(x, mid + 1, xhi, y, j + 1, yhi);
      ASSERT_LE(sum, total);
      if (sum == total && least > yhi) least = j;
    }
    ASSERT_EQ(s.y_mid, least) << x << " " << y;
  }
}

}  // namespace
}  // namespace lcsenum
