#ifndef OTG_EXACT_HPP
#define OTG_EXACT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "otg/terrain.hpp"

namespace otg {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleError : std::runtime_error {
  InfeasibleError(VertexId w, const std::string& what) : std::runtime_error(what), witness(w) {}
  VertexId witness;  // first witness no candidate sees
};

struct ExactOptions {
  std::size_t max_candidates = 24;
};

/// Minimum-cardinality subset of candidates seeing every witness.
/// Exhaustive search in increasing cardinality; among equal-size optima the
/// lexicographically smallest index sequence is returned. Throws
/// CapExceededError past the candidate cap and InfeasibleError when some
/// witness is invisible to every candidate.
std::vector<VertexId> minimum_guard_set(const Terrain& t, const std::vector<VertexId>& candidates,
                                        const std::vector<VertexId>& witnesses,
                                        const ExactOptions& options = {});

/// True iff every witness is seen by some guard (brute-force oracle).
bool verify_guarding(const Terrain& t, const std::vector<VertexId>& guards,
                     const std::vector<VertexId>& witnesses);

/// All reflex / convex / left-convex / right-convex vertices, ascending.
std::vector<VertexId> reflex_vertices(const Terrain& t);
std::vector<VertexId> convex_vertices(const Terrain& t);
std::vector<VertexId> vertices_of_class(const Terrain& t, VertexClass c);
std::vector<VertexId> all_vertices(const Terrain& t);

struct ReductionReport {
  bool reflex_cover_guards_everything = false;  // min cover of V_c by V_r covers V(T)
  bool reflex_optimum_matches_full = false;     // optima over V(T) and V_r agree on V_c
  std::size_t optimum_reflex = 0;
  std::size_t optimum_full = 0;
};

/// Checks on one instance that guarding the convex vertices by reflex
/// candidates is as strong as the unrestricted problem.
ReductionReport reduction_check(const Terrain& t, const ExactOptions& options = {});

}  // namespace otg

#endif  // OTG_EXACT_HPP
