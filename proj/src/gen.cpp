#include "otg/gen.hpp"

#include <stdexcept>

namespace otg {

namespace {

constexpr std::int64_t kCoordBound = std::int64_t{1} << 20;

Terrain from_ints(std::initializer_list<std::pair<int, int>> coords) {
  std::vector<Point> pts;
  pts.reserve(coords.size());
  for (const auto& [x, y] : coords) pts.push_back(Point{Rational(x), Rational(y)});
  return Terrain::validate(std::move(pts));
}

}  // namespace

Terrain random_terrain(const GenParams& p) {
  if (p.steps < 1 || p.max_run < 1 || p.max_jump < 1)
    throw std::invalid_argument("random_terrain: steps, max_run and max_jump must be positive");
  if (p.steps * p.max_run > kCoordBound)
    throw std::invalid_argument("random_terrain: steps * max_run exceeds the coordinate bound");
  if (p.max_jump > kCoordBound)
    throw std::invalid_argument("random_terrain: max_jump exceeds the coordinate bound");

  SplitMix64 rng(p.seed);
  bool start_vertical = false, end_vertical = false;
  switch (p.ends) {
    case EndStyle::VerticalBoth: start_vertical = end_vertical = true; break;
    case EndStyle::HorizontalBoth: break;
    case EndStyle::Mixed:
      start_vertical = rng.coin();
      end_vertical = rng.coin();
      break;
  }

  std::int64_t x = 0, y = 0;
  std::vector<Point> pts;
  pts.push_back(Point{Rational(x), Rational(y)});

  const auto wall = [&] {
    std::int64_t dy = rng.uniform(p.max_jump);
    if (rng.coin()) dy = -dy;
    if (y + dy > kCoordBound || y + dy < -kCoordBound) dy = -dy;
    y += dy;
    pts.push_back(Point{Rational(x), Rational(y)});
  };
  const auto run = [&] {
    x += rng.uniform(p.max_run);
    pts.push_back(Point{Rational(x), Rational(y)});
  };

  if (start_vertical) wall();
  for (std::int64_t s = 0; s < p.steps; ++s) {
    run();
    if (s + 1 < p.steps) wall();
  }
  if (end_vertical) wall();

  return Terrain::validate(std::move(pts));
}

std::map<std::string, Terrain> fixtures() {
  std::map<std::string, Terrain> out;
  out.emplace("E1", from_ints({{0, 3}, {0, 2}, {2, 2}, {2, 0}, {5, 0}, {5, 1}, {7, 1}, {7, 4}}));
  out.emplace("E2", from_ints({{0, 1}, {2, 1}, {2, 0}, {4, 0}, {4, 2}, {6, 2}}));
  out.emplace("E1_mirror", out.at("E1").mirror());
  // Frozen from random_terrain(seed=271, steps=7, max_run=3, max_jump=8,
  // vertical ends): the smallest scanned instance where the left sweep
  // fires an intersection event, which the plain fixtures never do.
  out.emplace("T3", from_ints({{0, 0},  {0, -8},  {3, -8}, {3, 0},  {4, 0},  {4, -1},
                               {7, -1}, {7, -8},  {8, -8}, {8, 0},  {9, 0},  {9, 4},
                               {10, 4}, {10, -1}, {13, -1}, {13, 6}}));
  return out;
}

}  // namespace otg
