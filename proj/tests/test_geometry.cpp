#include "doctest.h"

#include "otg/geometry.hpp"
#include "otg/gen.hpp"

using namespace otg;

namespace {

Point pt(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(BigInt(2), BigInt(4));
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK((a + a) == Rational(1));
  CHECK((a - Rational(1)) == Rational(BigInt(-1), BigInt(2)));
  CHECK((Rational(BigInt(3), BigInt(-6))).num() == -1);  // sign moves to the numerator
  CHECK(Rational(BigInt(-8), BigInt(5)) < Rational(2));
  CHECK(Rational(BigInt(7), BigInt(3)).str() == "7/3");
  CHECK(Rational(-12).str() == "-12");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("rational comparisons cross-multiply exactly") {
  // 1/3 < 34/100 < 1/2, all exact.
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(34), BigInt(100)));
  CHECK(Rational(BigInt(34), BigInt(100)) < Rational(BigInt(1), BigInt(2)));
  // Large values that would overflow 64-bit cross products.
  const Rational big(BigInt("123456789123456789"), BigInt("987654321987654321"));
  CHECK(big < Rational(BigInt(1), BigInt(7)));
  CHECK(big > Rational(BigInt(1), BigInt(9)));
}

TEST_CASE("orient") {
  CHECK(orient(pt(0, 0), pt(1, 0), pt(1, 1)) == Turn::Left);
  CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == Turn::Straight);
  CHECK(orient(pt(0, 0), pt(1, 0), pt(2, -1)) == Turn::Right);
}

TEST_CASE("orient is antisymmetric under swapping the last two points") {
  SplitMix64 rng(42);
  const auto coord = [&] { return static_cast<long long>(rng.uniform(2000)) - 1000; };
  for (int i = 0; i < 500; ++i) {
    const Point a = pt(coord(), coord());
    const Point b = pt(coord(), coord());
    const Point c = pt(coord(), coord());
    const Turn ab = orient(a, b, c);
    const Turn ba = orient(a, c, b);
    switch (ab) {
      case Turn::Left: CHECK(ba == Turn::Right); break;
      case Turn::Right: CHECK(ba == Turn::Left); break;
      case Turn::Straight: CHECK(ba == Turn::Straight); break;
    }
  }
}

TEST_CASE("side_of_line") {
  // Line through (7,4) and (2,0) evaluates to -8/5 at x = 0.
  CHECK(side_of_line(pt(0, 2), pt(7, 4), pt(2, 0)) == Side::Above);
  CHECK(side_of_line(pt(7, 4), pt(7, 4), pt(2, 0)) == Side::On);
  CHECK(side_of_line(pt(3, 0), pt(0, 1), pt(6, 1)) == Side::Below);
  CHECK_THROWS_AS(side_of_line(pt(0, 0), pt(1, 0), pt(1, 5)), std::invalid_argument);
}

TEST_CASE("side_of_line agrees with direct line evaluation") {
  // Second route: compare p.y against the interpolated line value computed
  // with rational division instead of a cross product.
  SplitMix64 rng(2024);
  const auto coord = [&] { return static_cast<long long>(rng.uniform(1 << 21)) - (1 << 20); };
  for (int i = 0; i < 300; ++i) {
    const Point a = pt(coord(), coord());
    Point b = pt(coord(), coord());
    if (a.x == b.x) b.x = b.x + Rational(1);
    const Point p = pt(coord(), coord());
    const Rational line_y = a.y + (b.y - a.y) * (p.x - a.x) / (b.x - a.x);
    const Side expected = p.y > line_y ? Side::Above : (p.y < line_y ? Side::Below : Side::On);
    CHECK(side_of_line(p, a, b) == expected);
  }
}

TEST_CASE("ray_intersection") {
  const Ray r1{pt(4, 4), pt(3, 3)};
  const Ray r2{pt(6, 2), pt(4, 2)};
  auto p = ray_intersection(r1, r2);
  REQUIRE(p.has_value());
  CHECK(*p == pt(2, 2));

  SUBCASE("symmetric in its arguments") {
    auto q = ray_intersection(r2, r1);
    REQUIRE(q.has_value());
    CHECK(*q == *p);
  }
  SUBCASE("parallel rays do not intersect") {
    CHECK(!ray_intersection(Ray{pt(0, 0), pt(1, 1)}, Ray{pt(0, 1), pt(1, 2)}).has_value());
  }
  SUBCASE("intersection behind an origin is rejected") {
    // The support lines cross at (6,6), behind the second ray's origin.
    CHECK(!ray_intersection(Ray{pt(0, 0), pt(1, 1)}, Ray{pt(3, 0), pt(2, -2)}).has_value());
  }
  SUBCASE("origins excluded") {
    // Rays meeting exactly at the first ray's origin.
    CHECK(!ray_intersection(Ray{pt(0, 0), pt(-1, -1)}, Ray{pt(2, -2), pt(1, -1)}).has_value());
  }
  SUBCASE("degenerate ray rejected") {
    CHECK_THROWS_AS(ray_intersection(Ray{pt(1, 1), pt(1, 1)}, r2), std::invalid_argument);
  }
  SUBCASE("vertical ray handled exactly") {
    auto v = ray_intersection(Ray{pt(2, 5), pt(2, 4)}, Ray{pt(6, 2), pt(4, 2)});
    REQUIRE(v.has_value());
    CHECK(*v == pt(2, 2));
  }
}

TEST_CASE("random symmetric ray intersections agree") {
  SplitMix64 rng(7);
  const auto coord = [&] { return static_cast<long long>(rng.uniform(40)) - 20; };
  int hits = 0;
  for (int i = 0; i < 800; ++i) {
    const Point o1 = pt(coord(), coord()), t1 = pt(coord(), coord());
    const Point o2 = pt(coord(), coord()), t2 = pt(coord(), coord());
    if (o1 == t1 || o2 == t2) continue;
    const auto a = ray_intersection(Ray{o1, t1}, Ray{o2, t2});
    const auto b = ray_intersection(Ray{o2, t2}, Ray{o1, t1});
    CHECK(a.has_value() == b.has_value());
    if (a && b) {
      CHECK(*a == *b);
      ++hits;
    }
  }
  CHECK(hits > 0);
}

TEST_SUITE_END();
