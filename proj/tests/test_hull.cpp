#include "doctest.h"

#include <map>

#include "otg/gen.hpp"
#include "otg/hull.hpp"
#include "otg/visibility.hpp"
#include "test_helpers.hpp"

using namespace otg;
using otg::testing::e1;
using otg::testing::terrain;

namespace {

std::map<VertexId, VertexId> horizon_map(const Terrain& t) {
  std::map<VertexId, VertexId> m;
  for (const auto& [v, r] : right_horizons(t)) m[v] = r;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("hull");

TEST_CASE("right horizons on E1") {
  const auto m = horizon_map(e1());
  REQUIRE(m.size() == 2);
  CHECK(m.at(1) == 7);
  CHECK(m.at(3) == 7);
}

TEST_CASE("push rejects out-of-order vertices") {
  const Terrain t = e1();
  UpperHullStack uhs(t);
  uhs.push(5);
  CHECK_THROWS_AS(uhs.push(7), std::invalid_argument);
}

TEST_CASE("rightmost left convex vertex falls back to its wall partner") {
  const Terrain t = terrain({{0, 0}, {0, 3}, {4, 3}, {4, 1}});
  const auto m = horizon_map(t);
  REQUIRE(m.size() == 1);
  CHECK(m.at(3) == 2);
}

TEST_CASE("hull horizons match the brute-force oracle") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenParams params;
    params.seed = seed;
    params.steps = 1 + static_cast<std::int64_t>(seed % 99);  // n up to 200
    params.max_run = 4;
    params.max_jump = 6;
    params.ends = EndStyle::VerticalBoth;
    const Terrain t = random_terrain(params);
    UpperHullStack uhs(t);
    std::size_t pushes = 0;
    for (VertexId v = static_cast<VertexId>(t.size()) - 1; v >= 0; --v) {
      const auto r = uhs.push(v);
      ++pushes;
      if (r) {
        CHECK(t.is_reflex(*r));
        CHECK(*r == right_horizon_bruteforce(t, v));
        CHECK(sees(t, v, *r));
        ++checked;
      }
    }
    CHECK(uhs.fallback_count() == 0);
    CHECK(uhs.pop_count() <= pushes);  // amortized linearity
  }
  CHECK(checked > 2000);
}

TEST_CASE("mirrored E1 horizons match the oracle") {
  const Terrain m = e1().mirror();
  const auto horizons = horizon_map(m);
  for (const auto& [v, r] : horizons) {
    CHECK(r == right_horizon_bruteforce(m, v));
  }
  // The left convex vertex at (-7,1) is seen by the last vertex (0,3),
  // which is the rightmost reflex vertex of the mirror.
  REQUIRE(horizons.count(1) == 1);
  CHECK(horizons.at(1) == 7);
  REQUIRE(horizons.count(3) == 1);
  CHECK(horizons.at(3) == 5);
}

TEST_SUITE_END();
