#include "otg/geometry.hpp"

#include <stdexcept>

namespace otg {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

Turn orient(const Point& a, const Point& b, const Point& c) {
  const int s = cross(a, b, c).sign();
  if (s > 0) return Turn::Left;
  if (s < 0) return Turn::Right;
  return Turn::Straight;
}

Side side_of_line(const Point& p, const Point& a, const Point& b) {
  if (a.x == b.x) throw std::invalid_argument("side_of_line: degenerate (vertical) support line");
  // Orient against the left-to-right direction of the line so that a left
  // turn means strictly above.
  const Point& lo = a.x < b.x ? a : b;
  const Point& hi = a.x < b.x ? b : a;
  switch (orient(lo, hi, p)) {
    case Turn::Left:
      return Side::Above;
    case Turn::Right:
      return Side::Below;
    default:
      return Side::On;
  }
}

std::optional<Point> ray_intersection(const Ray& r1, const Ray& r2) {
  const Rational d1x = r1.through.x - r1.origin.x;
  const Rational d1y = r1.through.y - r1.origin.y;
  const Rational d2x = r2.through.x - r2.origin.x;
  const Rational d2y = r2.through.y - r2.origin.y;
  if (d1x == 0 && d1y == 0) throw std::invalid_argument("ray_intersection: degenerate first ray");
  if (d2x == 0 && d2y == 0) throw std::invalid_argument("ray_intersection: degenerate second ray");

  const Rational denom = d1x * d2y - d1y * d2x;
  if (denom == 0) return std::nullopt;  // parallel or collinear

  const Rational ox = r2.origin.x - r1.origin.x;
  const Rational oy = r2.origin.y - r1.origin.y;
  const Rational t1 = (ox * d2y - oy * d2x) / denom;
  const Rational t2 = (ox * d1y - oy * d1x) / denom;
  if (t1.sign() <= 0 || t2.sign() <= 0) return std::nullopt;  // behind an origin
  return Point{r1.origin.x + t1 * d1x, r1.origin.y + t1 * d1y};
}

}  // namespace otg
