#ifndef OTG_HULL_HPP
#define OTG_HULL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "otg/terrain.hpp"

namespace otg {

/// Upper convex hull of the vertices processed so far, fed right to left.
/// The stack runs rightmost (bottom) to leftmost (top) with strictly
/// decreasing x; collinear points are popped. For a left convex vertex the
/// push yields its right horizon: the hull neighbor just right of it, or
/// U(v) when it is the rightmost vertex.
class UpperHullStack {
 public:
  explicit UpperHullStack(const Terrain& t) : t_(&t) {}

  /// Processes v (which must not lie right of the current top) and returns
  /// R(v) when v is left convex, nullopt otherwise.
  std::optional<VertexId> push(VertexId v);

  const std::vector<VertexId>& stack() const { return stack_; }
  std::size_t pop_count() const { return pops_; }
  /// Times the hull neighbor was convex and the oracle had to resolve R(v).
  std::size_t fallback_count() const { return fallbacks_; }

 private:
  const Terrain* t_;
  std::vector<VertexId> stack_;
  std::size_t pops_ = 0;
  std::size_t fallbacks_ = 0;
};

/// R(v) for every left convex vertex, one right-to-left pass, O(n) total.
/// Pairs are ordered by increasing LC vertex index.
std::vector<std::pair<VertexId, VertexId>> right_horizons(const Terrain& t);

}  // namespace otg

#endif  // OTG_HULL_HPP
