#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "otg/addressable_heap.hpp"
#include "otg/gen.hpp"

using namespace otg;

namespace {

struct IntLess {
  bool operator()(int a, int b) const { return a < b; }
};

}  // namespace

TEST_SUITE_BEGIN("heap");

TEST_CASE("max order with interleaved deletes") {
  AddressableHeap<int, IntLess> heap;
  const auto h3 = heap.insert(3);
  heap.insert(11);
  const auto h7 = heap.insert(7);
  heap.insert(5);
  CHECK(heap.top() == 11);
  heap.erase(h7);
  CHECK(heap.size() == 3);
  CHECK(heap.pop_top() == 11);
  CHECK(heap.top() == 5);
  heap.erase(h3);
  CHECK(heap.pop_top() == 5);
  CHECK(heap.empty());
}

TEST_CASE("handles stay valid across arbitrary churn") {
  AddressableHeap<std::uint64_t, std::less<std::uint64_t>> heap;
  SplitMix64 rng(99);
  std::vector<std::pair<int, std::uint64_t>> live;  // handle -> value
  std::multiset<std::uint64_t> reference;

  for (int round = 0; round < 5000; ++round) {
    const std::uint64_t dice = rng.next() % 3;
    if (dice == 0 && !live.empty()) {
      const std::size_t i = rng.next() % live.size();
      heap.erase(live[i].first);
      reference.erase(reference.find(live[i].second));
      live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
    } else if (dice == 1 && !reference.empty()) {
      const std::uint64_t top = heap.pop_top();
      CHECK(top == *reference.rbegin());
      reference.erase(std::prev(reference.end()));
      live.erase(std::find_if(live.begin(), live.end(),
                              [&](const auto& p) { return p.second == top; }));
    } else {
      // Unique values so the handle/value correspondence stays unambiguous.
      const std::uint64_t v = (rng.next() % 1000) * 100000 + static_cast<std::uint64_t>(round);
      live.emplace_back(heap.insert(v), v);
      reference.insert(v);
    }
    CHECK(heap.size() == reference.size());
    if (!reference.empty()) CHECK(heap.top() == *reference.rbegin());
  }
}

TEST_SUITE_END();
