#include "otg/hull.hpp"

#include <algorithm>
#include <stdexcept>

#include "otg/visibility.hpp"

namespace otg {

std::optional<VertexId> UpperHullStack::push(VertexId v) {
  const Terrain& t = *t_;
  const Point& pv = t.vertex(v);
  if (!stack_.empty() && pv.x > t.vertex(stack_.back()).x)
    throw std::invalid_argument("UpperHullStack: vertex right of current top");

  // Wall mates arrive with equal x; only the higher endpoint can ever sit
  // on the upper hull.
  if (!stack_.empty() && t.vertex(stack_.back()).x == pv.x) {
    if (pv.y <= t.vertex(stack_.back()).y) return std::nullopt;
    stack_.pop_back();
    ++pops_;
  }

  while (stack_.size() >= 2) {
    const Point& top = t.vertex(stack_[stack_.size() - 1]);
    const Point& below = t.vertex(stack_[stack_.size() - 2]);
    if (orient(pv, top, below) == Turn::Right) break;
    stack_.pop_back();
    ++pops_;
  }

  std::optional<VertexId> horizon;
  if (t.vclass(v) == VertexClass::LeftConvex) {
    if (stack_.empty()) {
      horizon = t.upper_vertex(v);
    } else {
      VertexId h = stack_.back();
      if (t.is_convex(h)) {
        // Should not happen for terrains with vertical ends; resolve with
        // the oracle and count it so tests can assert it stays at zero.
        ++fallbacks_;
        h = right_horizon_bruteforce(t, v);
      }
      horizon = h;
    }
  }
  stack_.push_back(v);
  return horizon;
}

std::vector<std::pair<VertexId, VertexId>> right_horizons(const Terrain& t) {
  UpperHullStack uhs(t);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v = static_cast<VertexId>(t.size()) - 1; v >= 0; --v) {
    if (auto r = uhs.push(v)) out.emplace_back(v, *r);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace otg
