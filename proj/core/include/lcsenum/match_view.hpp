#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "lcsenum/errors.hpp"

namespace lcsenum {

// 1-based index into X or Y. Zero is used only as the "before the start"
// sentinel (empty prefix, j' - 1 with j' = 1, etc.).
using Index = std::size_t;

// Read-only access to a pair of sequences X and Y. The algorithms only ever
// ask whether X[i] == Y[j]; y_at() exists so position sequences can be
// rendered back into strings. All indices are 1-based.
//
// Implementations must be pure: the same (i, j) always yields the same
// answer. Concurrent const calls must be safe.
class MatchView {
 public:
  virtual ~MatchView() = default;

  virtual Index len_x() const = 0;
  virtual Index len_y() const = 0;

  // Unchecked; callers guarantee 1 <= i <= len_x(), 1 <= j <= len_y().
  virtual bool equal(Index i, Index j) const = 0;

  // Unchecked; 1 <= j <= len_y().
  virtual char y_at(Index j) const = 0;
};

// View over two byte strings. Does not own the bytes.
class StringView final : public MatchView {
 public:
  StringView(std::string_view x, std::string_view y) : x_(x), y_(y) {}

  Index len_x() const override { return x_.size(); }
  Index len_y() const override { return y_.size(); }
  bool equal(Index i, Index j) const override { return x_[i - 1] == y_[j - 1]; }
  char y_at(Index j) const override { return y_[j - 1]; }

  std::string_view x() const { return x_; }
  std::string_view y() const { return y_; }

 private:
  std::string_view x_;
  std::string_view y_;
};

// View over two token arrays (e.g. interned line ids for diff-like use).
// y_at() reports the low byte of the token, which is only meaningful when
// tokens are bytes.
class TokenView final : public MatchView {
 public:
  TokenView(std::span<const std::uint32_t> x, std::span<const std::uint32_t> y)
      : x_(x), y_(y) {}

  Index len_x() const override { return x_.size(); }
  Index len_y() const override { return y_.size(); }
  bool equal(Index i, Index j) const override { return x_[i - 1] == y_[j - 1]; }
  char y_at(Index j) const override { return static_cast<char>(y_[j - 1] & 0xffu); }

 private:
  std::span<const std::uint32_t> x_;
  std::span<const std::uint32_t> y_;
};

// Decorator that counts equality queries. Not thread-safe; one per
// enumeration.
class CountingView final : public MatchView {
 public:
  explicit CountingView(const MatchView& inner) : inner_(&inner) {}

  Index len_x() const override { return inner_->len_x(); }
  Index len_y() const override { return inner_->len_y(); }
  bool equal(Index i, Index j) const override {
    ++queries_;
    return inner_->equal(i, j);
  }
  char y_at(Index j) const override { return inner_->y_at(j); }

  std::uint64_t queries() const { return queries_; }
  void reset() { queries_ = 0; }

 private:
  const MatchView* inner_;
  mutable std::uint64_t queries_ = 0;
};

// Bounds-checked equality query. Throws UsageError on out-of-range indices.
bool char_eq(const MatchView& view, Index i, Index j);

}  // namespace lcsenum
