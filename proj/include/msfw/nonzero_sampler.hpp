#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "random.hpp"

namespace msfw {

// Maintains an integer vector d over elements 0..n-1 under point updates
// (d_u += delta) and supports uniform sampling from the set of elements with
// d_u != 0, all in O(1) per operation.
//
// Layout: slots_ is preallocated to n entries; the live prefix [0, count_)
// holds one (element, value) pair per non-zero element, in insertion order
// perturbed by swap-removal. pos_[u] is u's slot index, or -1 when d_u == 0.
// A newly non-zero element is written to slot count_ and then count_ is
// incremented; removal moves the last live pair into the freed slot.
class NonZeroSampler {
 public:
  explicit NonZeroSampler(std::int64_t n)
      : slots_(static_cast<std::size_t>(n)), pos_(static_cast<std::size_t>(n), kNoSlot) {}

  std::int64_t universeSize() const { return static_cast<std::int64_t>(pos_.size()); }
  std::int64_t nonzeroCount() const { return count_; }

  std::int64_t value(std::int64_t u) const {
    assert(u >= 0 && u < universeSize());
    std::int32_t p = pos_[static_cast<std::size_t>(u)];
    return p == kNoSlot ? 0 : slots_[static_cast<std::size_t>(p)].value;
  }

  void update(std::int64_t u, std::int64_t delta) {
    assert(u >= 0 && u < universeSize());
    lastUpdateSlotAccesses_ = 0;
    std::int32_t p = readPos(u);
    if (p == kNoSlot) {
      if (delta == 0) return;
      writeSlot(count_, {static_cast<std::int32_t>(u), delta});
      writePos(u, static_cast<std::int32_t>(count_));
      ++count_;
      return;
    }
    std::int64_t d = readSlot(p).value + delta;
    if (d != 0) {
      writeSlotValue(p, d);
      return;
    }
    // d_u dropped to zero: recycle the slot with the last live pair.
    Slot last = readSlot(count_ - 1);
    if (last.element != u) {
      writeSlot(p, last);
      writePos(last.element, p);
    }
    writePos(u, kNoSlot);
    --count_;
  }

  // Uniform over the non-zero elements. Throws EmptySupport when none exist.
  std::int64_t sample(Rng& rng) const {
    if (count_ == 0) throw EmptySupport("sample from all-zero vector");
    std::size_t j = uniformBelow(rng, static_cast<std::uint64_t>(count_));
    return slots_[j].element;
  }

  // Element held in live slot i, 0 <= i < nonzeroCount(). Lets callers scan
  // the non-zero support without touching zero entries.
  std::int64_t elementAt(std::int64_t i) const {
    assert(i >= 0 && i < count_);
    return slots_[static_cast<std::size_t>(i)].element;
  }

  // Number of slot reads/writes performed by the most recent update().
  int lastUpdateSlotAccesses() const { return lastUpdateSlotAccesses_; }

 private:
  struct Slot {
    std::int32_t element;
    std::int64_t value;
  };
  static constexpr std::int32_t kNoSlot = -1;

  std::int32_t readPos(std::int64_t u) {
    ++lastUpdateSlotAccesses_;
    return pos_[static_cast<std::size_t>(u)];
  }
  void writePos(std::int64_t u, std::int32_t p) {
    ++lastUpdateSlotAccesses_;
    pos_[static_cast<std::size_t>(u)] = p;
  }
  Slot readSlot(std::int64_t i) {
    ++lastUpdateSlotAccesses_;
    return slots_[static_cast<std::size_t>(i)];
  }
  void writeSlot(std::int64_t i, Slot s) {
    ++lastUpdateSlotAccesses_;
    slots_[static_cast<std::size_t>(i)] = s;
  }
  void writeSlotValue(std::int64_t i, std::int64_t v) {
    ++lastUpdateSlotAccesses_;
    slots_[static_cast<std::size_t>(i)].value = v;
  }

  std::vector<Slot> slots_;
  std::vector<std::int32_t> pos_;
  std::int64_t count_ = 0;
  int lastUpdateSlotAccesses_ = 0;
};

}  // namespace msfw
