#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <new>
#include <vector>

#include "lcsenum/match_view.hpp"

namespace lcsenum {

// Tracks auxiliary storage in "index cells" (one stored integer index).
// Every container the enumeration path allocates goes through
// MeteredAllocator, and every recursive frame of the first-LCS search
// registers a fixed number of cells via FrameCells.
class SpaceMeter {
 public:
  void acquire(std::size_t cells) {
    live_ += cells;
    peak_ = std::max(peak_, live_);
  }
  void release(std::size_t cells) { live_ -= cells; }

  std::size_t live() const { return live_; }
  std::size_t peak() const { return peak_; }
  void reset_peak() { peak_ = live_; }

 private:
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

// Allocator that reports its allocations (element count == cell count) to an
// optional SpaceMeter. A null meter makes it a plain allocator.
template <typename T>
class MeteredAllocator {
 public:
  using value_type = T;

  MeteredAllocator() noexcept = default;
  explicit MeteredAllocator(SpaceMeter* meter) noexcept : meter_(meter) {}
  template <typename U>
  MeteredAllocator(const MeteredAllocator<U>& other) noexcept : meter_(other.meter()) {}

  T* allocate(std::size_t n) {
    T* p = std::allocator<T>{}.allocate(n);
    if (meter_ != nullptr) meter_->acquire(n);
    return p;
  }
  void deallocate(T* p, std::size_t n) noexcept {
    if (meter_ != nullptr) meter_->release(n);
    std::allocator<T>{}.deallocate(p, n);
  }

  SpaceMeter* meter() const noexcept { return meter_; }

  template <typename U>
  bool operator==(const MeteredAllocator<U>& other) const noexcept {
    return meter_ == other.meter();
  }

 private:
  SpaceMeter* meter_ = nullptr;
};

using IndexBuffer = std::vector<Index, MeteredAllocator<Index>>;

// RAII registration of a recursion frame's bookkeeping slots.
class FrameCells {
 public:
  FrameCells(SpaceMeter* meter, std::size_t cells) : meter_(meter), cells_(cells) {
    if (meter_ != nullptr) meter_->acquire(cells_);
  }
  ~FrameCells() {
    if (meter_ != nullptr) meter_->release(cells_);
  }
  FrameCells(const FrameCells&) = delete;
  FrameCells& operator=(const FrameCells&) = delete;

 private:
  SpaceMeter* meter_;
  std::size_t cells_;
};

}  // namespace lcsenum
