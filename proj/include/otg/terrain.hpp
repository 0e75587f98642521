#ifndef OTG_TERRAIN_HPP
#define OTG_TERRAIN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "otg/geometry.hpp"

namespace otg {

using VertexId = std::int32_t;
constexpr VertexId kNoVertex = -1;

/// Vertex classes. Walking left to right: convex = left turn, reflex =
/// right turn; "left" = vertical-to-horizontal, "right" =
/// horizontal-to-vertical. End vertices with a flat incident edge are
/// classified as if the terrain dropped off there: LeftReflex at the
/// start, RightReflex at the end.
enum class VertexClass : std::uint8_t {
  LeftConvex,    // LC
  RightConvex,   // RC
  LeftReflex,    // LR
  RightReflex,   // RR
};

const char* to_string(VertexClass c);

struct TerrainError : std::runtime_error {
  enum class Kind {
    NotMonotone,
    NotOrthogonal,
    ConsecutiveParallelEdges,
    TooFewVertices,
    CoordinateOutOfRange,
    DuplicateVertex,
  };

  TerrainError(Kind k, VertexId idx, const std::string& what);

  Kind kind;
  VertexId index;  // offending vertex
};

const char* to_string(TerrainError::Kind k);

struct ValidateLimits {
  /// Input coordinates must be integers with |x|,|y| <= max_abs_coord.
  BigInt max_abs_coord = BigInt(1) << 20;
};

/// Validated x-monotone orthogonal polyline, immutable after construction.
/// Edges strictly alternate horizontal/vertical; every vertical edge has a
/// convex lower endpoint and a reflex upper endpoint.
class Terrain {
 public:
  /// Validates and classifies; throws TerrainError on the first violation.
  static Terrain validate(std::vector<Point> points, const ValidateLimits& limits = {});

  std::size_t size() const { return pts_.size(); }
  const Point& vertex(VertexId v) const { return pts_.at(static_cast<std::size_t>(v)); }
  const std::vector<Point>& vertices() const { return pts_; }

  VertexClass vclass(VertexId v) const { return cls_.at(static_cast<std::size_t>(v)); }
  const std::vector<VertexClass>& classes() const { return cls_; }

  bool is_convex(VertexId v) const {
    const VertexClass c = vclass(v);
    return c == VertexClass::LeftConvex || c == VertexClass::RightConvex;
  }
  bool is_reflex(VertexId v) const { return !is_convex(v); }

  /// U(v): the reflex vertex sharing v's vertical edge, directly above it.
  /// Throws std::invalid_argument if v is reflex or lies on no wall.
  VertexId upper_vertex(VertexId v) const;

  /// Wall partner in either direction (the other endpoint of v's vertical
  /// edge), or nullopt for flat-end vertices that lie on no wall.
  std::optional<VertexId> wall_partner(VertexId v) const;

  bool starts_vertical() const { return pts_.size() >= 2 && pts_[0].x == pts_[1].x; }
  bool ends_vertical() const {
    const std::size_t n = pts_.size();
    return n >= 2 && pts_[n - 2].x == pts_[n - 1].x;
  }

  /// Reflection x -> -x with reversed vertex order. Index i maps to
  /// mirror_index(size(), i); classes swap LC<->RC and LR<->RR.
  Terrain mirror() const;

  Rational x_min() const { return pts_.front().x; }
  Rational x_max() const { return pts_.back().x; }

  struct HeightRange {
    Rational y_low;
    Rational y_high;
  };
  /// The terrain points at abscissa x form the segment [y_low, y_high]
  /// (a single point away from walls). Throws std::out_of_range outside
  /// [x_min, x_max].
  HeightRange height_range_at(const Rational& x) const;

 private:
  Terrain() = default;

  std::vector<Point> pts_;
  std::vector<VertexClass> cls_;
  std::vector<VertexId> wall_;  // wall partner per vertex, kNoVertex if none
};

/// The involution between a terrain's indices and its mirror's.
inline VertexId mirror_index(std::size_t n, VertexId i) {
  return static_cast<VertexId>(n) - 1 - i;
}

/// Result of extending a flat-ended terrain so that both terminal edges are
/// vertical. Coordinates are scaled by an even integer factor and a unit
/// wall is added above whichever end was flat; the scale keeps the new top
/// vertices below every visibility breakpoint, so the visible set from an
/// added vertex equals its limit as the wall height tends to zero.
struct Extension {
  Terrain terrain;
  BigInt scale;
  std::vector<VertexId> added;  // indices of the added vertices in `terrain`

  bool has_front() const { return !added.empty() && added.front() == 0; }
  bool has_back() const {
    return !added.empty() && added.back() == static_cast<VertexId>(terrain.size()) - 1;
  }
  /// Maps an extended-terrain index to the original terrain's index.
  VertexId to_original(VertexId v) const { return has_front() ? v - 1 : v; }
  /// Maps an original index into the extended terrain.
  VertexId to_extended(VertexId v) const { return has_front() ? v + 1 : v; }
};

/// Extends a terrain whose first and/or last edge is horizontal; returns
/// nullopt when both terminal edges are already vertical (no-op).
std::optional<Extension> extend(const Terrain& t);

/// For each added vertex appearing in guards_ext, the original vertex that
/// replaces it: the replacement sees every witness only the added guard
/// covered, preferring the candidate covering most of what the added one
/// saw, ties to the lowest index. Pairs are (added, replacement) in
/// extended-terrain indices. Throws std::logic_error if no replacement
/// exists (internal-consistency bug).
std::vector<std::pair<VertexId, VertexId>> retraction_replacements(
    const Extension& ext, const std::vector<VertexId>& guards_ext);

/// Given a guard set over the extended terrain, replaces any added vertex
/// per retraction_replacements and maps indices back to the original
/// terrain. One-for-one, so the cardinality is preserved.
std::vector<VertexId> retract_guards(const Terrain& t, const Extension& ext,
                                     const std::vector<VertexId>& guards_ext);

}  // namespace otg

#endif  // OTG_TERRAIN_HPP
