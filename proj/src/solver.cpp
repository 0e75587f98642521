#include "otg/solver.hpp"

#include <algorithm>
#include <map>

#include "otg/visibility.hpp"

namespace otg {

std::string provenance_label(std::uint8_t bits) {
  std::string s;
  const auto add = [&](const char* tag) {
    if (!s.empty()) s += '+';
    s += tag;
  };
  if (bits & provenance::kLeftSweep) add("left");
  if (bits & provenance::kRightSweep) add("right");
  if (bits & provenance::kRetraction) add("retraction");
  if (s.empty()) s = "none";
  return s;
}

namespace {

struct MergedGuard {
  std::vector<VertexId> witnesses;
  std::uint8_t provenance = 0;
};

/// Remaps a sweep over the mirrored terrain back to the base indexing.
SweepResult unmirror(SweepResult r, std::size_t n) {
  std::vector<std::pair<VertexId, std::vector<VertexId>>> items;
  items.reserve(r.guards.size());
  for (std::size_t i = 0; i < r.guards.size(); ++i) {
    auto list = std::move(r.lists[i]);
    for (VertexId& w : list) w = mirror_index(n, w);
    items.emplace_back(mirror_index(n, r.guards[i]), std::move(list));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SweepResult out;
  out.counters = r.counters;
  for (auto& [g, list] : items) {
    out.guards.push_back(g);
    out.lists.push_back(std::move(list));
  }
  return out;
}

}  // namespace

GuardSolution approx_guard_set(const Terrain& t, SolveSides sides, const SolverHooks& hooks) {
  GuardSolution sol;
  const auto ext = extend(t);
  const Terrain& work = ext ? ext->terrain : t;
  if (ext) {
    sol.extended = true;
    sol.scale = ext->scale;
  }

  std::map<VertexId, MergedGuard> merged;
  if (sides != SolveSides::Right) {
    SweepResult left = run_left_sweep(work, hooks.left);
    sol.left_counters = left.counters;
    for (std::size_t i = 0; i < left.guards.size(); ++i) {
      MergedGuard& m = merged[left.guards[i]];
      m.witnesses.insert(m.witnesses.end(), left.lists[i].begin(), left.lists[i].end());
      m.provenance |= provenance::kLeftSweep;
    }
  }
  if (sides != SolveSides::Left) {
    SweepResult right = unmirror(run_left_sweep(work.mirror(), hooks.right), work.size());
    sol.right_counters = right.counters;
    for (std::size_t i = 0; i < right.guards.size(); ++i) {
      MergedGuard& m = merged[right.guards[i]];
      m.witnesses.insert(m.witnesses.end(), right.lists[i].begin(), right.lists[i].end());
      m.provenance |= provenance::kRightSweep;
    }
  }

  if (ext) {
    std::vector<VertexId> guard_ids;
    guard_ids.reserve(merged.size());
    for (const auto& [g, m] : merged) guard_ids.push_back(g);
    for (const auto& [prime, repl] : retraction_replacements(*ext, guard_ids)) {
      MergedGuard taken = std::move(merged.at(prime));
      merged.erase(prime);
      MergedGuard& m = merged[repl];
      // The replacement dominates the added guard, so it sees the whole
      // list it inherits.
      m.witnesses.insert(m.witnesses.end(), taken.witnesses.begin(), taken.witnesses.end());
      m.provenance |= taken.provenance | provenance::kRetraction;
    }
  }

  for (auto& [g, m] : merged) {
    sol.guards.push_back(ext ? ext->to_original(g) : g);
    if (ext) {
      for (VertexId& w : m.witnesses) w = ext->to_original(w);
    }
    sol.lists.push_back(std::move(m.witnesses));
    sol.provenance.push_back(m.provenance);
  }
  return sol;
}

CoverageReport verify_solution(const Terrain& t, const std::vector<VertexId>& guards) {
  CoverageReport report;
  for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v) {
    bool seen = false;
    for (VertexId g : guards) {
      if (sees(t, g, v)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      report.covered = false;
      report.uncovered.push_back(v);
    }
  }
  return report;
}

}  // namespace otg
