#ifndef OTG_SOLVER_HPP
#define OTG_SOLVER_HPP

#include <cstdint>
#include <vector>

#include "otg/sweep.hpp"
#include "otg/terrain.hpp"

namespace otg {

enum class SolveSides { Left, Right, Both };

namespace provenance {
constexpr std::uint8_t kLeftSweep = 1;
constexpr std::uint8_t kRightSweep = 2;
constexpr std::uint8_t kRetraction = 4;
}  // namespace provenance

std::string provenance_label(std::uint8_t bits);

/// Guard set with per-guard ordered witness lists. Indices refer to the
/// terrain the solve was asked about; the extension, when one was needed,
/// is internal and already retracted.
struct GuardSolution {
  std::vector<VertexId> guards;                // ascending
  std::vector<std::vector<VertexId>> lists;    // parallel to guards
  std::vector<std::uint8_t> provenance;        // parallel to guards
  SweepCounters left_counters;
  SweepCounters right_counters;
  bool extended = false;
  BigInt scale = 1;

  std::size_t guard_count() const { return guards.size(); }
};

struct SolverHooks {
  const SweepHooks* left = nullptr;
  const SweepHooks* right = nullptr;
};

/// Full approximation pipeline: extend if a terminal edge is horizontal,
/// sweep for the left convex witnesses, sweep the mirror for the right
/// convex ones, take the union, then retract any added vertex. The result
/// guards every vertex and is at most twice the optimum over all vertices.
GuardSolution approx_guard_set(const Terrain& t, SolveSides sides = SolveSides::Both,
                               const SolverHooks& hooks = {});

struct CoverageReport {
  bool covered = true;
  std::vector<VertexId> uncovered;
};

/// Oracle check that every vertex of t is seen by some guard.
CoverageReport verify_solution(const Terrain& t, const std::vector<VertexId>& guards);
inline CoverageReport verify_solution(const Terrain& t, const GuardSolution& sol) {
  return verify_solution(t, sol.guards);
}

}  // namespace otg

#endif  // OTG_SOLVER_HPP
