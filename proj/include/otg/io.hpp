#ifndef OTG_IO_HPP
#define OTG_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otg/solver.hpp"
#include "otg/terrain.hpp"

namespace otg {

/// Error with the 1-based source line it was detected on.
struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
  int line;
};

/// Terrain file: first significant line holds the vertex count, then one
/// "x y" integer pair per line, left to right. Lines starting with '#' are
/// comments; blank lines are ignored.
Terrain parse_terrain(std::string_view text);
std::string serialize_terrain(const Terrain& t);

/// Solution file: guard count, then per guard "index: w1 w2 ..." with
/// 0-based indices and witnesses in insertion order, then provenance
/// comments.
struct SolutionData {
  std::vector<VertexId> guards;
  std::vector<std::vector<VertexId>> lists;
  std::vector<std::string> provenance;  // labels, may be empty
};

SolutionData parse_solution(std::string_view text);
std::string serialize_solution(const SolutionData& s);
SolutionData to_solution_data(const GuardSolution& sol);

/// Deterministic SVG rendering: the terrain as a polyline, guards as
/// filled circles, witness segments dashed. All coordinates are exact
/// integers with the y axis flipped for screen space.
std::string render_svg(const Terrain& t, const SolutionData* solution = nullptr);

}  // namespace otg

#endif  // OTG_IO_HPP
