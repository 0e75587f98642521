#ifndef OTG_ADDRESSABLE_HEAP_HPP
#define OTG_ADDRESSABLE_HEAP_HPP

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace otg {

/// Binary max-heap with stable integer handles and O(log n) deletion from
/// anywhere. Values are kept in slots that never move; the heap permutes
/// slot ids only. Less is a strict weak order; the maximum is at the top.
template <typename T, typename Less>
class AddressableHeap {
 public:
  using Handle = int;
  static constexpr Handle kNull = -1;

  explicit AddressableHeap(Less less = Less{}) : less_(std::move(less)) {}

  std::size_t size() const { return heap_.size(); }
  bool empty() const { return heap_.empty(); }

  const T& value(Handle h) const { return slots_[static_cast<std::size_t>(h)].value; }
  const T& top() const { return value(heap_.front()); }
  Handle top_handle() const { return heap_.front(); }

  Handle insert(T value) {
    Handle h;
    if (free_ != kNull) {
      h = free_;
      free_ = slots_[static_cast<std::size_t>(h)].pos;
      slots_[static_cast<std::size_t>(h)].value = std::move(value);
    } else {
      h = static_cast<Handle>(slots_.size());
      slots_.push_back(Slot{std::move(value), 0});
    }
    slots_[static_cast<std::size_t>(h)].pos = static_cast<int>(heap_.size());
    heap_.push_back(h);
    sift_up(heap_.size() - 1);
    return h;
  }

  T pop_top() {
    T v = std::move(slots_[static_cast<std::size_t>(heap_.front())].value);
    remove_at(0);
    return v;
  }

  void erase(Handle h) {
    assert(h != kNull);
    remove_at(static_cast<std::size_t>(slots_[static_cast<std::size_t>(h)].pos));
  }

 private:
  struct Slot {
    T value;
    int pos;  // position in heap_, or next free slot when on the free list
  };

  void remove_at(std::size_t i) {
    const Handle h = heap_[i];
    const std::size_t last = heap_.size() - 1;
    if (i != last) {
      heap_[i] = heap_[last];
      slots_[static_cast<std::size_t>(heap_[i])].pos = static_cast<int>(i);
    }
    heap_.pop_back();
    if (i < heap_.size()) {
      sift_down(i);
      sift_up(i);
    }
    slots_[static_cast<std::size_t>(h)].pos = free_;
    free_ = h;
  }

  bool heap_less(std::size_t a, std::size_t b) const {
    return less_(slots_[static_cast<std::size_t>(heap_[a])].value,
                 slots_[static_cast<std::size_t>(heap_[b])].value);
  }

  void swap_pos(std::size_t a, std::size_t b) {
    std::swap(heap_[a], heap_[b]);
    slots_[static_cast<std::size_t>(heap_[a])].pos = static_cast<int>(a);
    slots_[static_cast<std::size_t>(heap_[b])].pos = static_cast<int>(b);
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!heap_less(parent, i)) break;
      swap_pos(parent, i);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      std::size_t best = i;
      const std::size_t l = 2 * i + 1, r = 2 * i + 2;
      if (l < heap_.size() && heap_less(best, l)) best = l;
      if (r < heap_.size() && heap_less(best, r)) best = r;
      if (best == i) break;
      swap_pos(i, best);
      i = best;
    }
  }

  Less less_;
  std::vector<Slot> slots_;
  std::vector<Handle> heap_;
  Handle free_ = kNull;
};

}  // namespace otg

#endif  // OTG_ADDRESSABLE_HEAP_HPP
