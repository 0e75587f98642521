#include "doctest.h"

#include "otg/gen.hpp"
#include "otg/io.hpp"
#include "otg/solver.hpp"
#include "test_helpers.hpp"

using namespace otg;
using otg::testing::e1;

TEST_SUITE_BEGIN("io");

TEST_CASE("terrain files round-trip") {
  const std::string e1_text = "8\n0 3\n0 2\n2 2\n2 0\n5 0\n5 1\n7 1\n7 4\n";
  const Terrain t = parse_terrain(e1_text);
  CHECK(t.vertices() == e1().vertices());
  CHECK(serialize_terrain(t) == e1_text);
  CHECK(serialize_terrain(parse_terrain(serialize_terrain(t))) == serialize_terrain(t));
}

TEST_CASE("comments and blank lines are ignored") {
  const Terrain t = parse_terrain("# a terrain\n\n2\n# wall\n0 0\n0 5\n\n# end\n");
  CHECK(t.size() == 2);
}

TEST_CASE("parse errors carry line numbers") {
  const auto line_of = [](const char* text) {
    try {
      parse_terrain(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("2\n0 0\n1 1\n") == 3);          // diagonal edge
  CHECK(line_of("2\n0 zero\n1 1\n") == 2);       // malformed integer
  CHECK(line_of("3\n0 0\n0 5\n") == 4);          // count mismatch
  CHECK(line_of("2\n0 0\n0 5\n7 7\n") == 4);     // trailing content
  CHECK(line_of("nope\n") == 1);
}

TEST_CASE("solution files round-trip") {
  const GuardSolution sol = approx_guard_set(e1());
  const SolutionData data = to_solution_data(sol);
  const std::string text = serialize_solution(data);
  CHECK(text == "2\n2: 4 6\n7: 3 1\n# provenance 2: right\n# provenance 7: left\n");
  const SolutionData parsed = parse_solution(text);
  CHECK(parsed.guards == data.guards);
  CHECK(parsed.lists == data.lists);
}

TEST_CASE("solution parse rejects guard lines without witnesses") {
  CHECK_THROWS_AS(parse_solution("1\n4:\n"), ParseError);
}

TEST_CASE("svg rendering") {
  const Terrain t = e1();
  const std::string plain = render_svg(t);
  CHECK(plain.find("<polyline") != std::string::npos);
  CHECK(plain.find("2,3 2,4 4,4 4,6 7,6 7,5 9,5 9,2") != std::string::npos);
  CHECK(plain.find("<circle") == std::string::npos);

  const GuardSolution sol = approx_guard_set(t);
  const SolutionData data = to_solution_data(sol);
  const std::string with = render_svg(t, &data);
  std::size_t circles = 0, dashes = 0, pos = 0;
  while ((pos = with.find("<circle", pos)) != std::string::npos) ++circles, pos += 7;
  pos = 0;
  while ((pos = with.find("stroke-dasharray", pos)) != std::string::npos) ++dashes, pos += 16;
  CHECK(circles == 2);
  CHECK(dashes == 4);

  CHECK(render_svg(t, &data) == render_svg(t, &data));  // deterministic
}

TEST_SUITE_END();
