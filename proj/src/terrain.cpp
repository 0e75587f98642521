#include "otg/terrain.hpp"

#include <algorithm>
#include <cassert>

#include "otg/visibility.hpp"

namespace otg {

const char* to_string(VertexClass c) {
  switch (c) {
    case VertexClass::LeftConvex: return "LC";
    case VertexClass::RightConvex: return "RC";
    case VertexClass::LeftReflex: return "LR";
    case VertexClass::RightReflex: return "RR";
  }
  return "?";
}

const char* to_string(TerrainError::Kind k) {
  using Kind = TerrainError::Kind;
  switch (k) {
    case Kind::NotMonotone: return "NotMonotone";
    case Kind::NotOrthogonal: return "NotOrthogonal";
    case Kind::ConsecutiveParallelEdges: return "ConsecutiveParallelEdges";
    case Kind::TooFewVertices: return "TooFewVertices";
    case Kind::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case Kind::DuplicateVertex: return "DuplicateVertex";
  }
  return "?";
}

TerrainError::TerrainError(Kind k, VertexId idx, const std::string& what)
    : std::runtime_error(what), kind(k), index(idx) {}

namespace {

TerrainError make_error(TerrainError::Kind k, VertexId idx) {
  return TerrainError(k, idx, std::string(to_string(k)) + " at vertex " + std::to_string(idx));
}

bool coord_ok(const Rational& c, const BigInt& bound) {
  return c.is_integer() && c.num() >= -bound && c.num() <= bound;
}

}  // namespace

Terrain Terrain::validate(std::vector<Point> points, const ValidateLimits& limits) {
  const std::size_t n = points.size();
  if (n < 2) throw make_error(TerrainError::Kind::TooFewVertices, 0);

  for (std::size_t i = 0; i < n; ++i) {
    if (!coord_ok(points[i].x, limits.max_abs_coord) || !coord_ok(points[i].y, limits.max_abs_coord))
      throw make_error(TerrainError::Kind::CoordinateOutOfRange, static_cast<VertexId>(i));
    if (i == 0) continue;
    const Point& a = points[i - 1];
    const Point& b = points[i];
    const bool same_x = a.x == b.x;
    const bool same_y = a.y == b.y;
    if (same_x && same_y) throw make_error(TerrainError::Kind::DuplicateVertex, static_cast<VertexId>(i));
    if (!same_x && !same_y) throw make_error(TerrainError::Kind::NotOrthogonal, static_cast<VertexId>(i));
    if (same_y && b.x < a.x) throw make_error(TerrainError::Kind::NotMonotone, static_cast<VertexId>(i));
    if (i >= 2) {
      const Point& p = points[i - 2];
      const bool prev_vertical = p.x == a.x;
      if (prev_vertical == same_x)
        throw make_error(TerrainError::Kind::ConsecutiveParallelEdges, static_cast<VertexId>(i));
    }
  }

  Terrain t;
  t.pts_ = std::move(points);
  t.cls_.resize(n);
  t.wall_.assign(n, kNoVertex);

  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = static_cast<VertexId>(i);
    const bool in_vertical = i > 0 && t.pts_[i - 1].x == t.pts_[i].x;
    const bool out_vertical = i + 1 < n && t.pts_[i].x == t.pts_[i + 1].x;

    if (i == 0 && !out_vertical) {
      t.cls_[i] = VertexClass::LeftReflex;  // flat start
      continue;
    }
    if (i + 1 == n && !in_vertical) {
      t.cls_[i] = VertexClass::RightReflex;  // flat end
      continue;
    }

    // One incident edge is vertical; "left" means we leave it horizontally.
    const bool left = in_vertical;
    bool convex;
    if (left) {
      // Wall below means we arrived going down, which is a left turn.
      convex = t.pts_[i - 1].y > t.pts_[i].y;
      t.wall_[i] = v - 1;
    } else {
      convex = t.pts_[i + 1].y > t.pts_[i].y;
      t.wall_[i] = v + 1;
    }
    if (left) {
      t.cls_[i] = convex ? VertexClass::LeftConvex : VertexClass::LeftReflex;
    } else {
      t.cls_[i] = convex ? VertexClass::RightConvex : VertexClass::RightReflex;
    }
  }
  return t;
}

VertexId Terrain::upper_vertex(VertexId v) const {
  if (is_reflex(v)) throw std::invalid_argument("upper_vertex: vertex is reflex");
  const VertexId w = wall_.at(static_cast<std::size_t>(v));
  assert(w != kNoVertex);  // convex vertices always lie on a wall
  return w;
}

std::optional<VertexId> Terrain::wall_partner(VertexId v) const {
  const VertexId w = wall_.at(static_cast<std::size_t>(v));
  if (w == kNoVertex) return std::nullopt;
  return w;
}

Terrain Terrain::mirror() const {
  std::vector<Point> pts(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    const Point& p = pts_[pts_.size() - 1 - i];
    pts[i] = Point{-p.x, p.y};
  }
  Terrain m;
  m.pts_ = std::move(pts);
  const std::size_t n = pts_.size();
  m.cls_.resize(n);
  m.wall_.assign(n, kNoVertex);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i;
    switch (cls_[j]) {
      case VertexClass::LeftConvex: m.cls_[i] = VertexClass::RightConvex; break;
      case VertexClass::RightConvex: m.cls_[i] = VertexClass::LeftConvex; break;
      case VertexClass::LeftReflex: m.cls_[i] = VertexClass::RightReflex; break;
      case VertexClass::RightReflex: m.cls_[i] = VertexClass::LeftReflex; break;
    }
    if (wall_[j] != kNoVertex) m.wall_[i] = mirror_index(n, wall_[j]);
  }
  return m;
}

Terrain::HeightRange Terrain::height_range_at(const Rational& x) const {
  if (x < x_min() || x > x_max()) throw std::out_of_range("height_range_at: abscissa outside terrain");
  // Last vertex with pts_[i].x <= x.
  std::size_t lo = 0, hi = pts_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (pts_[mid].x <= x) lo = mid;
    else hi = mid - 1;
  }
  if (pts_[lo].x < x) {
    // Interior of the horizontal edge (lo, lo+1).
    return HeightRange{pts_[lo].y, pts_[lo].y};
  }
  // On a vertex abscissa: collect the wall span if there is one.
  Rational y_low = pts_[lo].y, y_high = pts_[lo].y;
  const auto widen = [&](const Point& p) {
    if (p.y < y_low) y_low = p.y;
    if (p.y > y_high) y_high = p.y;
  };
  if (lo + 1 < pts_.size() && pts_[lo + 1].x == x) widen(pts_[lo + 1]);
  if (lo > 0 && pts_[lo - 1].x == x) widen(pts_[lo - 1]);
  return HeightRange{y_low, y_high};
}

std::optional<Extension> extend(const Terrain& t) {
  const bool flat_front = !t.starts_vertical();
  const bool flat_back = !t.ends_vertical();
  if (!flat_front && !flat_back) return std::nullopt;

  const BigInt scale = 2 * ((t.x_max() - t.x_min()).num() + 1);
  std::vector<Point> pts;
  pts.reserve(t.size() + 2);
  std::vector<VertexId> added;
  if (flat_front) {
    const Point& u = t.vertices().front();
    pts.push_back(Point{u.x * Rational(scale), u.y * Rational(scale) + 1});
    added.push_back(0);
  }
  for (const Point& p : t.vertices()) pts.push_back(Point{p.x * Rational(scale), p.y * Rational(scale)});
  if (flat_back) {
    const Point& v = t.vertices().back();
    pts.push_back(Point{v.x * Rational(scale), v.y * Rational(scale) + 1});
    added.push_back(static_cast<VertexId>(pts.size()) - 1);
  }

  ValidateLimits limits;
  limits.max_abs_coord = limits.max_abs_coord * scale + 1;
  Extension ext{Terrain::validate(std::move(pts), limits), scale, std::move(added)};
  return ext;
}

std::vector<std::pair<VertexId, VertexId>> retraction_replacements(
    const Extension& ext, const std::vector<VertexId>& guards_ext) {
  const Terrain& te = ext.terrain;
  const std::size_t ne = te.size();
  std::vector<char> is_guard(ne, 0);
  for (VertexId g : guards_ext) is_guard.at(static_cast<std::size_t>(g)) = 1;
  std::vector<char> is_added(ne, 0);
  for (VertexId a : ext.added) is_added[static_cast<std::size_t>(a)] = 1;

  std::vector<std::pair<VertexId, VertexId>> replacements;
  std::vector<VertexId> guards = guards_ext;
  for (VertexId prime : ext.added) {
    auto it = std::find(guards.begin(), guards.end(), prime);
    if (it == guards.end()) continue;

    // Witnesses among the original vertices that the added guard covers,
    // split into those no other guard sees (must be re-covered) and the
    // full covered set (used to prefer the strongest replacement).
    std::vector<VertexId> sole, covered;
    for (std::size_t w = 0; w < ne; ++w) {
      if (is_added[w]) continue;
      const VertexId wid = static_cast<VertexId>(w);
      if (!sees(te, prime, wid)) continue;
      covered.push_back(wid);
      bool other = false;
      for (VertexId g : guards) {
        if (g != prime && sees(te, g, wid)) {
          other = true;
          break;
        }
      }
      if (!other) sole.push_back(wid);
    }

    VertexId best = kNoVertex;
    std::size_t best_cover = 0;
    for (std::size_t c = 0; c < ne; ++c) {
      if (is_added[c] || is_guard[c]) continue;
      const VertexId cid = static_cast<VertexId>(c);
      bool all = true;
      for (VertexId w : sole) {
        if (!sees(te, cid, w)) {
          all = false;
          break;
        }
      }
      if (!all) continue;
      std::size_t cov = 0;
      for (VertexId w : covered)
        if (sees(te, cid, w)) ++cov;
      if (best == kNoVertex || cov > best_cover) {
        best = cid;
        best_cover = cov;
      }
    }
    if (best == kNoVertex)
      throw std::logic_error("retract_guards: no replacement vertex dominates an added guard");
    replacements.emplace_back(prime, best);
    *it = best;
    is_guard[static_cast<std::size_t>(prime)] = 0;
    is_guard[static_cast<std::size_t>(best)] = 1;
  }
  return replacements;
}

std::vector<VertexId> retract_guards(const Terrain& t, const Extension& ext,
                                     const std::vector<VertexId>& guards_ext) {
  if (t.size() + ext.added.size() != ext.terrain.size())
    throw std::invalid_argument("retract_guards: extension does not match terrain");
  const auto replacements = retraction_replacements(ext, guards_ext);
  std::vector<VertexId> guards = guards_ext;
  for (const auto& [prime, repl] : replacements) {
    *std::find(guards.begin(), guards.end(), prime) = repl;
  }
  for (VertexId& g : guards) g = ext.to_original(g);
  std::sort(guards.begin(), guards.end());
  return guards;
}

}  // namespace otg
