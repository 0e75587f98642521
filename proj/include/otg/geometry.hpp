#ifndef OTG_GEOMETRY_HPP
#define OTG_GEOMETRY_HPP

#include <optional>

#include "otg/rational.hpp"

namespace otg {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  /// Total "left of" order: p < q iff p.x < q.x.
  bool left_of(const Point& o) const { return x < o.x; }
};

enum class Turn { Left, Straight, Right };
enum class Side { Above, On, Below };

/// Sign of the cross product (b - a) x (c - a).
Turn orient(const Point& a, const Point& b, const Point& c);

/// Raw cross product (b - a) x (c - a); positive means a left turn.
Rational cross(const Point& a, const Point& b, const Point& c);

/// Position of p relative to the non-vertical line through a and b,
/// comparing p.y against the line's y-value at p.x.
/// Throws std::invalid_argument if a.x == b.x.
Side side_of_line(const Point& p, const Point& a, const Point& b);

/// Half-line origin + t*(through - origin), t >= 0.
struct Ray {
  Point origin;
  Point through;
};

/// Unique interior intersection of two rays (t > 0 strictly on both),
/// or nullopt when the rays are parallel, divergent, or meet behind an
/// origin. Throws on a degenerate ray (origin == through).
std::optional<Point> ray_intersection(const Ray& r1, const Ray& r2);

}  // namespace otg

#endif  // OTG_GEOMETRY_HPP
