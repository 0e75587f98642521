#include "doctest.h"

#include <algorithm>

#include "otg/exact.hpp"
#include "otg/terrain.hpp"
#include "otg/visibility.hpp"
#include "test_helpers.hpp"

using namespace otg;
using otg::testing::e1;
using otg::testing::e2;
using otg::testing::points;
using otg::testing::pt;
using otg::testing::terrain;

namespace {

std::vector<VertexClass> classes_of(const Terrain& t) { return t.classes(); }

using VC = VertexClass;

}  // namespace

TEST_SUITE_BEGIN("terrain");

TEST_CASE("validate accepts the fixtures") {
  CHECK(e1().size() == 8);
  CHECK(e2().size() == 6);
}

TEST_CASE("validate reports the first violation") {
  using Kind = TerrainError::Kind;
  const auto expect = [](std::initializer_list<std::pair<long long, long long>> coords, Kind kind,
                         VertexId index) {
    try {
      Terrain::validate(otg::testing::points(coords));
      FAIL_CHECK("expected a TerrainError");
    } catch (const TerrainError& e) {
      CHECK(e.kind == kind);
      CHECK(e.index == index);
    }
  };
  expect({{0, 0}, {1, 1}}, Kind::NotOrthogonal, 1);
  expect({{0, 0}, {2, 0}, {5, 0}}, Kind::ConsecutiveParallelEdges, 2);
  expect({{0, 0}, {0, 1}, {0, 3}}, Kind::ConsecutiveParallelEdges, 2);
  expect({{0, 0}, {-2, 0}}, Kind::NotMonotone, 1);
  expect({{0, 0}, {0, 0}}, Kind::DuplicateVertex, 1);
  expect({{0, 0}}, Kind::TooFewVertices, 0);
  expect({{0, 0}, {0, 1 << 21}}, Kind::CoordinateOutOfRange, 1);

  // Non-integer coordinates are outside the domain.
  std::vector<Point> pts{pt(0, 0), Point{Rational(BigInt(1), BigInt(2)), Rational(0)}};
  CHECK_THROWS_AS(Terrain::validate(std::move(pts)), TerrainError);
}

TEST_CASE("classification of the fixtures") {
  CHECK(classes_of(e1()) == std::vector<VC>{VC::RightReflex, VC::LeftConvex, VC::RightReflex,
                                            VC::LeftConvex, VC::RightConvex, VC::LeftReflex,
                                            VC::RightConvex, VC::LeftReflex});
  // Flat ends classify as reflex drop-offs.
  CHECK(classes_of(e2()) == std::vector<VC>{VC::LeftReflex, VC::RightReflex, VC::LeftConvex,
                                            VC::RightConvex, VC::LeftReflex, VC::RightReflex});
  // A single wall.
  CHECK(classes_of(terrain({{0, 0}, {0, 5}})) == std::vector<VC>{VC::RightConvex, VC::LeftReflex});
}

TEST_CASE("upper_vertex") {
  const Terrain t = e1();
  CHECK(t.upper_vertex(1) == 0);
  CHECK(t.upper_vertex(3) == 2);
  CHECK(t.upper_vertex(4) == 5);
  CHECK(t.upper_vertex(6) == 7);
  CHECK_THROWS_AS(t.upper_vertex(0), std::invalid_argument);
}

TEST_CASE("wall partner pairs convex with reflex") {
  const auto check_bijection = [](const Terrain& t) {
    for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) {
      const auto partner = t.wall_partner(v);
      REQUIRE(partner.has_value());
      CHECK(*t.wall_partner(*partner) == v);
      CHECK(t.is_convex(v) != t.is_convex(*partner));
      if (t.is_convex(v)) {
        const VertexId up = t.upper_vertex(v);
        CHECK(t.vertex(up).y > t.vertex(v).y);
        // LC pairs with RR above, RC with LR above.
        if (t.vclass(v) == VC::LeftConvex) CHECK(t.vclass(up) == VC::RightReflex);
        if (t.vclass(v) == VC::RightConvex) CHECK(t.vclass(up) == VC::LeftReflex);
      }
    }
  };
  for (const auto& [name, t] : fixtures()) {
    if (t.starts_vertical() && t.ends_vertical()) check_bijection(t);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenParams p;
    p.seed = seed;
    p.steps = 1 + static_cast<std::int64_t>(seed % 16);
    p.ends = EndStyle::VerticalBoth;
    check_bijection(random_terrain(p));
  }
}

TEST_CASE("mirror") {
  const Terrain t = e1();
  const Terrain m = t.mirror();
  CHECK(m.vertex(5) == pt(-2, 2));
  CHECK(m.vclass(5) == VC::LeftReflex);  // RR maps to LR

  SUBCASE("mirroring twice is the identity") {
    const Terrain mm = m.mirror();
    CHECK(mm.vertices() == t.vertices());
    CHECK(mm.classes() == t.classes());
  }
  SUBCASE("classes swap under mirroring") {
    for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) {
      const VertexId mv = mirror_index(t.size(), v);
      switch (t.vclass(v)) {
        case VC::LeftConvex: CHECK(m.vclass(mv) == VC::RightConvex); break;
        case VC::RightConvex: CHECK(m.vclass(mv) == VC::LeftConvex); break;
        case VC::LeftReflex: CHECK(m.vclass(mv) == VC::RightReflex); break;
        case VC::RightReflex: CHECK(m.vclass(mv) == VC::LeftReflex); break;
      }
    }
  }
  SUBCASE("single wall mirrors to its class swap") {
    const Terrain w = terrain({{0, 0}, {0, 5}}).mirror();
    CHECK(classes_of(w) == std::vector<VC>{VC::RightReflex, VC::LeftConvex});
  }
}

TEST_CASE("height_range_at") {
  const Terrain t = e1();
  const auto at = [&](long long x) { return t.height_range_at(Rational(x)); };
  CHECK(at(2).y_low == Rational(0));
  CHECK(at(2).y_high == Rational(2));
  CHECK(at(3).y_low == Rational(0));
  CHECK(at(3).y_high == Rational(0));
  CHECK(at(7).y_low == Rational(1));
  CHECK(at(7).y_high == Rational(4));
  CHECK(t.height_range_at(Rational(BigInt(9), BigInt(2))).y_low == Rational(0));
  CHECK_THROWS_AS(t.height_range_at(Rational(-1)), std::out_of_range);
  CHECK_THROWS_AS(t.height_range_at(Rational(8)), std::out_of_range);
}

TEST_CASE("extend") {
  SUBCASE("no-op for terrains with vertical ends") {
    CHECK(!extend(e1()).has_value());
  }
  SUBCASE("scales and adds unit walls on both flat ends") {
    const auto ext = extend(e2());
    REQUIRE(ext.has_value());
    CHECK(ext->scale == 14);
    CHECK(ext->terrain.size() == 8);
    CHECK(ext->added == std::vector<VertexId>{0, 7});
    CHECK(ext->terrain.vertex(0) == pt(0, 15));
    CHECK(ext->terrain.vertex(1) == pt(0, 14));
    CHECK(ext->terrain.vertex(7) == pt(84, 29));
    CHECK(ext->terrain.vertex(6) == pt(84, 28));
    CHECK(ext->terrain.starts_vertical());
    CHECK(ext->terrain.ends_vertical());
  }
  SUBCASE("one-sided when only one end is flat") {
    const Terrain t = terrain({{0, 0}, {0, 2}, {3, 2}});  // vertical start, flat end
    const auto ext = extend(t);
    REQUIRE(ext.has_value());
    CHECK(ext->added.size() == 1);
    CHECK(ext->added[0] == 3);
    CHECK(!ext->has_front());
    CHECK(ext->has_back());
    CHECK(ext->to_original(2) == 2);
  }
}

TEST_CASE("retract_guards") {
  const Terrain t = e2();
  const auto ext = extend(t);
  REQUIRE(ext.has_value());

  SUBCASE("identity when no added vertex is a guard") {
    const auto out = retract_guards(t, *ext, {5});  // (56,28) in the extension
    CHECK(out == std::vector<VertexId>{4});
  }
  SUBCASE("added guards are replaced one for one") {
    // {2, 7}: the scaled w1 plus the vertex added above the right end;
    // together they cover the whole extension.
    const auto out = retract_guards(t, *ext, {2, 7});
    REQUIRE(out.size() == 2);
    CHECK(out[0] == 1);
    CHECK(out[1] == 4);
    // The replacement must see everything only the added guard covered.
    CHECK(verify_guarding(t, out, all_vertices(t)));
  }
}

TEST_SUITE_END();
