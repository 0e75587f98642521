#ifndef OTG_VISIBILITY_HPP
#define OTG_VISIBILITY_HPP

#include <cstddef>
#include <vector>

#include "otg/terrain.hpp"

namespace otg {

/// Brute-force visibility test: p sees q iff the segment pq is never
/// strictly below the terrain. Grazing contact counts as visible; at a
/// wall abscissa a segment point is below the terrain only if it is below
/// the wall's bottom. O(n) per query.
bool sees(const Terrain& t, VertexId p, VertexId q);

/// Rightmost reflex vertex that sees the left convex vertex v. Throws
/// std::invalid_argument when v is not left convex.
VertexId right_horizon_bruteforce(const Terrain& t, VertexId v);

/// All-pairs visibility, O(n^3). Symmetric with a true diagonal.
class VisibilityMatrix {
 public:
  static VisibilityMatrix build(const Terrain& t, std::size_t cap = 512);

  bool sees(VertexId p, VertexId q) const {
    return bits_[static_cast<std::size_t>(p) * n_ + static_cast<std::size_t>(q)];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

}  // namespace otg

#endif  // OTG_VISIBILITY_HPP
