#ifndef OTG_SWEEP_HPP
#define OTG_SWEEP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "otg/terrain.hpp"

namespace otg {

/// Ray from a candidate guard through its obstacle; defines the guard's
/// current leftward visibility boundary. A dummy ray's obstacle is the
/// witness that created the stack entry rather than a left reflex vertex.
struct ShadowRay {
  VertexId origin;
  VertexId obstacle;
  bool dummy;
};

struct SweepCounters {
  std::uint64_t events_left_convex = 0;
  std::uint64_t events_right_convex = 0;
  std::uint64_t events_left_reflex = 0;
  std::uint64_t events_right_reflex = 0;
  /// Intersection events that were above (or on) the terrain and fired the
  /// deletion rule; each one retires at least one stack entry for good.
  std::uint64_t intersections_fired = 0;
  /// Intersection events found strictly below the terrain and dropped.
  std::uint64_t intersections_discarded = 0;
  std::uint64_t ms_pushes = 0;
  std::uint64_t ms_pops = 0;     // removals from the top
  std::uint64_t ms_deletes = 0;  // removals from the middle
  std::uint64_t heap_inserts = 0;
  std::uint64_t heap_deletes = 0;
  std::uint64_t heap_pop_max = 0;
  std::uint64_t ms_sees_calls = 0;
  std::uint64_t hull_fallbacks = 0;
  /// Incremented whenever k + t (stack size plus retired guards) would
  /// decrease across an event; always zero when the sweep is healthy.
  std::uint64_t kt_violations = 0;
  /// Incremented whenever |H| >= max(1, |MS|) at an event boundary.
  std::uint64_t heap_bound_violations = 0;

  std::uint64_t heap_ops() const { return heap_inserts + heap_deletes + heap_pop_max; }
  std::uint64_t intersections_total() const { return intersections_fired + intersections_discarded; }
};

/// One-sided solution: guards with their ordered witness lists. Guards are
/// sorted ascending; each list keeps sweep insertion order.
struct SweepResult {
  std::vector<VertexId> guards;
  std::vector<std::vector<VertexId>> lists;
  SweepCounters counters;

  std::size_t guard_count() const { return guards.size(); }
};

/// F: the first witness of each guard's list. No reflex vertex can see two
/// of these, which makes |F| a lower bound certificate.
std::vector<VertexId> extract_first_witnesses(const SweepResult& r);

/// Observer view passed to hooks after every processed event.
struct SweepEventView {
  enum class Kind { Vertex, Intersection };
  Kind kind;
  VertexId vertex = kNoVertex;                       // vertex events
  VertexClass vertex_class = VertexClass::LeftConvex;
  std::optional<Point> point;                        // intersection events
  bool fired = false;                                // deletion rule ran

  /// Stack entries top (leftmost, lowest) to bottom.
  std::vector<ShadowRay> ms;
  std::size_t heap_size = 0;
  /// Abscissa of the next event, if any.
  std::optional<Rational> next_x;
  std::size_t stack_size = 0;          // k
  std::size_t retired_guards = 0;      // t
};

struct SweepHooks {
  std::function<void(const SweepEventView&)> after_event;
  /// Every O(1) visibility test: stack entry's vertex, queried vertex, and
  /// the ray test's verdict.
  std::function<void(VertexId origin, VertexId obstacle, bool dummy, VertexId witness, bool saw)>
      on_ms_sees;
};

/// Right-to-left sweep computing an optimal guard set for the left convex
/// witnesses using reflex candidates. Requires vertical first and last
/// edges (extend flat-ended terrains first).
SweepResult run_left_sweep(const Terrain& t, const SweepHooks* hooks = nullptr);

/// Stable line format for sweep traces (one line per event).
std::string trace_line(const SweepEventView& view);
constexpr const char* kTraceHeader = "# otguard trace v1";

}  // namespace otg

#endif  // OTG_SWEEP_HPP
