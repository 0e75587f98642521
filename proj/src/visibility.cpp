#include "otg/visibility.hpp"

#include <cstdlib>
#include <stdexcept>

namespace otg {

namespace {

/// True if the point (x, h) lies strictly above the line through p-q,
/// i.e. the segment value at x is strictly below h.
bool segment_below(const Point& p, const Point& q, const Rational& x, const Rational& h) {
  return orient(p, q, Point{x, h}) == Turn::Left;
}

}  // namespace

bool sees(const Terrain& t, VertexId p, VertexId q) {
  if (p == q) return true;
  const Point& P = t.vertex(p);
  const Point& Q = t.vertex(q);
  if (P.x == Q.x) {
    // Same abscissa means both endpoints lie on the same wall, which in a
    // valid terrain makes them adjacent.
    return std::abs(p - q) == 1;
  }
  const Point& a = P.x < Q.x ? P : Q;
  const Point& b = P.x < Q.x ? Q : P;

  // The segment is blocked iff it dips strictly below some horizontal edge
  // within the clamped overlap. Zero-length overlaps at wall abscissas are
  // on the terrain, not below it, and violations at interior walls are
  // always witnessed by an adjacent horizontal edge endpoint.
  const auto& pts = t.vertices();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].y != pts[i + 1].y) continue;  // vertical edge
    const Rational& h = pts[i].y;
    const Rational& lo = pts[i].x > a.x ? pts[i].x : a.x;
    const Rational& hi = pts[i + 1].x < b.x ? pts[i + 1].x : b.x;
    if (!(lo < hi)) continue;
    if (segment_below(a, b, lo, h) || segment_below(a, b, hi, h)) return false;
  }
  return true;
}

VertexId right_horizon_bruteforce(const Terrain& t, VertexId v) {
  if (t.vclass(v) != VertexClass::LeftConvex)
    throw std::invalid_argument("right_horizon_bruteforce: vertex is not left convex");
  for (VertexId r = static_cast<VertexId>(t.size()) - 1; r >= 0; --r) {
    if (t.is_reflex(r) && sees(t, v, r)) return r;
  }
  throw std::logic_error("right_horizon_bruteforce: no reflex vertex sees v");
}

VisibilityMatrix VisibilityMatrix::build(const Terrain& t, std::size_t cap) {
  const std::size_t n = t.size();
  if (n > cap) throw std::invalid_argument("VisibilityMatrix: terrain larger than cap");
  VisibilityMatrix m;
  m.n_ = n;
  m.bits_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    m.bits_[i * n + i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      const char s = otg::sees(t, static_cast<VertexId>(i), static_cast<VertexId>(j)) ? 1 : 0;
      m.bits_[i * n + j] = s;
      m.bits_[j * n + i] = s;
    }
  }
  return m;
}

}  // namespace otg
