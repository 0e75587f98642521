#include "otg/exact.hpp"

#include <algorithm>
#include <string>

#include "otg/visibility.hpp"

namespace otg {

namespace {

/// Fixed-width bitset over witnesses, sized at runtime.
class WitnessSet {
 public:
  explicit WitnessSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  WitnessSet& operator|=(const WitnessSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  bool covers(const WitnessSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }
  bool any_outside(const WitnessSet& o) const {  // this has a bit o lacks
    return !o.covers(*this);
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  std::size_t count_outside(const WitnessSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(words_[i] & ~o.words_[i]));
    return c;
  }
  bool operator==(const WitnessSet& o) const { return words_ == o.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

struct Search {
  const std::vector<WitnessSet>& coverage;
  const std::vector<WitnessSet>& suffix_or;
  const WitnessSet& all;
  std::vector<std::size_t> chosen;

  bool dfs(std::size_t next, std::size_t slots, const WitnessSet& covered) {
    if (covered.covers(all)) return true;
    if (slots == 0) return false;
    if (next >= coverage.size()) return false;
    WitnessSet reachable = covered;
    reachable |= suffix_or[next];
    if (!reachable.covers(all)) return false;
    for (std::size_t i = next; i < coverage.size(); ++i) {
      if (!coverage[i].any_outside(covered)) continue;  // adds nothing new
      WitnessSet with = covered;
      with |= coverage[i];
      chosen.push_back(i);
      if (dfs(i + 1, slots - 1, with)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::vector<VertexId> minimum_guard_set(const Terrain& t, const std::vector<VertexId>& candidates,
                                        const std::vector<VertexId>& witnesses,
                                        const ExactOptions& options) {
  if (candidates.size() > options.max_candidates)
    throw CapExceededError("minimum_guard_set: " + std::to_string(candidates.size()) +
                           " candidates exceed the cap of " + std::to_string(options.max_candidates));
  if (witnesses.empty()) return {};

  const std::size_t w = witnesses.size();
  std::vector<WitnessSet> coverage(candidates.size(), WitnessSet(w));
  WitnessSet all(w);
  for (std::size_t j = 0; j < w; ++j) all.set(j);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = 0; j < w; ++j) {
      if (sees(t, candidates[i], witnesses[j])) coverage[i].set(j);
    }
  }

  // Feasibility: every witness must have some candidate.
  {
    WitnessSet reach(w);
    for (const auto& c : coverage) reach |= c;
    if (!reach.covers(all)) {
      for (std::size_t j = 0; j < w; ++j) {
        if (!reach.test(j))
          throw InfeasibleError(witnesses[j], "minimum_guard_set: witness " +
                                                  std::to_string(witnesses[j]) +
                                                  " is invisible to every candidate");
      }
    }
  }

  std::vector<WitnessSet> suffix_or(candidates.size() + 1, WitnessSet(w));
  for (std::size_t i = candidates.size(); i-- > 0;) {
    suffix_or[i] = suffix_or[i + 1];
    suffix_or[i] |= coverage[i];
  }

  // Greedy cover bounds the cardinality loop.
  std::size_t greedy_size = 0;
  {
    WitnessSet covered(w);
    while (!covered.covers(all)) {
      std::size_t best = coverage.size();
      std::size_t best_gain = 0;
      for (std::size_t i = 0; i < coverage.size(); ++i) {
        const std::size_t gain = coverage[i].count_outside(covered);
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      covered |= coverage[best];
      ++greedy_size;
    }
  }

  for (std::size_t k = 1; k <= greedy_size; ++k) {
    Search search{coverage, suffix_or, all, {}};
    if (search.dfs(0, k, WitnessSet(w))) {
      std::vector<VertexId> out;
      out.reserve(search.chosen.size());
      for (std::size_t i : search.chosen) out.push_back(candidates[i]);
      return out;
    }
  }
  throw std::logic_error("minimum_guard_set: greedy cover not reproduced");  // unreachable
}

bool verify_guarding(const Terrain& t, const std::vector<VertexId>& guards,
                     const std::vector<VertexId>& witnesses) {
  for (VertexId w : witnesses) {
    bool seen = false;
    for (VertexId g : guards) {
      if (sees(t, g, w)) {
        seen = true;
        break;
      }
    }
    if (!seen) return false;
  }
  return true;
}

std::vector<VertexId> reflex_vertices(const Terrain& t) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v)
    if (t.is_reflex(v)) out.push_back(v);
  return out;
}

std::vector<VertexId> convex_vertices(const Terrain& t) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v)
    if (t.is_convex(v)) out.push_back(v);
  return out;
}

std::vector<VertexId> vertices_of_class(const Terrain& t, VertexClass c) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(t.size()); ++v)
    if (t.vclass(v) == c) out.push_back(v);
  return out;
}

std::vector<VertexId> all_vertices(const Terrain& t) {
  std::vector<VertexId> out(t.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<VertexId>(i);
  return out;
}

ReductionReport reduction_check(const Terrain& t, const ExactOptions& options) {
  ReductionReport report;
  const auto reflex = reflex_vertices(t);
  const auto convex = convex_vertices(t);
  const auto everything = all_vertices(t);

  const auto reflex_cover = minimum_guard_set(t, reflex, convex, options);
  report.optimum_reflex = reflex_cover.size();
  report.reflex_cover_guards_everything = verify_guarding(t, reflex_cover, everything);

  const auto full_cover = minimum_guard_set(t, everything, convex, options);
  report.optimum_full = full_cover.size();
  report.reflex_optimum_matches_full = full_cover.size() == reflex_cover.size();
  return report;
}

}  // namespace otg
