#ifndef OTG_GEN_HPP
#define OTG_GEN_HPP

#include <cstdint>
#include <map>
#include <string>

#include "otg/terrain.hpp"

namespace otg {

/// SplitMix64: the 64-bit mixer from Steele, Lea and Flood's SplittableRandom.
/// Chosen so fixtures derived from seeds are portable; the constants are the
/// standard ones (increment 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9
/// and 0x94D049BB133111EB).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [1, bound] (bound >= 1).
  std::int64_t uniform(std::int64_t bound) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(bound)) + 1;
  }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

enum class EndStyle { VerticalBoth, HorizontalBoth, Mixed };

struct GenParams {
  std::uint64_t seed = 0;
  std::int64_t steps = 8;       // number of horizontal runs
  std::int64_t max_run = 4;     // max horizontal edge length
  std::int64_t max_jump = 4;    // max wall height
  EndStyle ends = EndStyle::VerticalBoth;
};

/// Deterministic random orthogonal terrain: `steps` horizontal runs with
/// walls between them, and terminal walls per the end style. Always passes
/// validation; coordinates stay within the input bound.
Terrain random_terrain(const GenParams& params);

/// Named fixtures used across the test suites. T3 is a frozen
/// generator output on which the sweep provably fires an intersection
/// event.
std::map<std::string, Terrain> fixtures();

}  // namespace otg

#endif  // OTG_GEN_HPP
