#include "otg/sweep.hpp"

#include <cassert>
#include <list>
#include <stdexcept>

#include "otg/addressable_heap.hpp"
#include "otg/hull.hpp"

namespace otg {

namespace {

struct MSEntry {
  VertexId vertex;
  VertexId obstacle;
  bool dummy;
  int ev_up = -1;    // heap handle shared with the neighbor toward the top
  int ev_down = -1;  // handle shared with the neighbor toward the bottom
};

using MsList = std::list<MSEntry>;
using MsIt = MsList::iterator;

struct HeapEvent {
  Point p;
  MsIt upper;  // nearer the top of the stack
  MsIt lower;
};

struct EventLess {
  bool operator()(const HeapEvent& a, const HeapEvent& b) const {
    const int c = a.p.x.compare(b.p.x);
    if (c != 0) return c < 0;
    return a.p.y < b.p.y;
  }
};

class LeftSweep {
 public:
  LeftSweep(const Terrain& t, const SweepHooks* hooks)
      : t_(t), hooks_(hooks), uhs_(t), lists_(t.size()) {
    if (!t.starts_vertical() || !t.ends_vertical())
      throw std::invalid_argument("run_left_sweep: terrain must start and end with vertical edges");
  }

  SweepResult run() {
    VertexId next = static_cast<VertexId>(t_.size()) - 1;
    while (next >= 0) {
      // Ties go to the intersection: the ray order must be repaired before
      // any test at or left of the crossing.
      if (!heap_.empty() && heap_.top().p.x >= t_.vertex(next).x) {
        process_intersection(next);
      } else {
        process_vertex(next);
        --next;
      }
    }

    SweepResult res;
    res.counters = c_;
    res.counters.hull_fallbacks = uhs_.fallback_count();
    for (std::size_t v = 0; v < lists_.size(); ++v) {
      if (lists_[v].empty()) continue;
      res.guards.push_back(static_cast<VertexId>(v));
      res.lists.push_back(std::move(lists_[v]));
    }
    return res;
  }

 private:
  // --- Visibility extraction from shadow rays ---

  bool ms_sees(const MSEntry& e, VertexId w) {
    ++c_.ms_sees_calls;
    const Point& o = t_.vertex(e.vertex);
    const Point& ob = t_.vertex(e.obstacle);
    bool saw;
    if (o.x == ob.x) {
      // Vertical dummy ray: only from the first push when the rightmost
      // vertex is left convex.
      saw = t_.vertex(w).y >= ob.y;
    } else {
      saw = side_of_line(t_.vertex(w), ob, o) != Side::Below;
    }
    if (hooks_ && hooks_->on_ms_sees) hooks_->on_ms_sees(e.vertex, e.obstacle, e.dummy, w, saw);
    return saw;
  }

  Ray ray_of(const MSEntry& e) const { return Ray{t_.vertex(e.vertex), t_.vertex(e.obstacle)}; }

  bool ray_through(const MSEntry& e, const Point& p) const {
    const Point& o = t_.vertex(e.vertex);
    const Point& ob = t_.vertex(e.obstacle);
    if (o.x == ob.x) return false;  // vertical rays never host heap events
    return p.x < o.x && orient(o, ob, p) == Turn::Straight;
  }

  // --- Heap / adjacency maintenance ---

  void erase_event(int h) {
    const HeapEvent& ev = heap_.value(h);
    ev.upper->ev_down = -1;
    ev.lower->ev_up = -1;
    heap_.erase(h);
    ++c_.heap_deletes;
  }

  void try_link(MsIt upper, MsIt lower) {
    assert(upper->ev_down == -1 && lower->ev_up == -1);
    const auto p = ray_intersection(ray_of(*upper), ray_of(*lower));
    if (!p || !(p->x < sweep_x_)) return;  // keep only crossings strictly left of the sweep
    const int h = heap_.insert(HeapEvent{*p, upper, lower});
    ++c_.heap_inserts;
    upper->ev_down = h;
    lower->ev_up = h;
  }

  enum class Removal { Pop, Delete };

  void remove_entry(MsIt it, Removal kind) {
    if (it->ev_up != -1) erase_event(it->ev_up);
    if (it->ev_down != -1) erase_event(it->ev_down);
    const MsIt above = it == ms_.begin() ? ms_.end() : std::prev(it);
    const MsIt below = std::next(it);
    ms_.erase(it);
    if (kind == Removal::Pop) ++c_.ms_pops;
    else ++c_.ms_deletes;
    if (above != ms_.end() && below != ms_.end()) try_link(above, below);
  }

  void pop_top() { remove_entry(ms_.begin(), Removal::Pop); }

  MsIt push_entry(VertexId vertex, VertexId obstacle, bool dummy) {
    ms_.push_front(MSEntry{vertex, obstacle, dummy});
    ++c_.ms_pushes;
    const MsIt it = ms_.begin();
    const MsIt below = std::next(it);
    if (below != ms_.end()) try_link(it, below);
    return it;
  }

  void add_witness(VertexId guard, VertexId witness) {
    auto& list = lists_[static_cast<std::size_t>(guard)];
    if (list.empty()) ++alive_;
    list.push_back(witness);
  }

  // --- Event handlers ---

  void handle_left_convex(VertexId v, VertexId horizon) {
    bool top_sees = false;
    while (!ms_.empty()) {
      if (ms_sees(ms_.front(), v)) {
        top_sees = true;
        break;
      }
      if (ms_.front().vertex > horizon) break;  // strictly right of R(v)
      if (ms_.front().vertex == horizon)
        throw std::logic_error("sweep: shadow ray denies visibility of the right horizon");
      pop_top();
    }
    if (top_sees) {
      add_witness(ms_.front().vertex, v);
    } else {
      push_entry(horizon, v, /*dummy=*/true);
      add_witness(horizon, v);
    }
  }

  void handle_left_reflex(VertexId v) {
    bool popped_seer = false;
    VertexId last_seer = kNoVertex;
    while (!ms_.empty() && ms_sees(ms_.front(), v)) {
      last_seer = ms_.front().vertex;
      popped_seer = true;
      pop_top();
    }
    if (popped_seer) push_entry(last_seer, v, /*dummy=*/false);
  }

  void handle_right_reflex(VertexId v) {
    const Rational& vy = t_.vertex(v).y;
    const VertexId u = ms_.empty() ? kNoVertex : ms_.front().vertex;
    while (!ms_.empty() && t_.vertex(ms_.front().vertex).y < vy) pop_top();
    if (u != kNoVertex && t_.vertex(u).y < vy &&
        lists_[static_cast<std::size_t>(u)].size() == 1) {
      auto& lu = lists_[static_cast<std::size_t>(u)];
      const VertexId witness = lu.front();
      lu.clear();
      lists_[static_cast<std::size_t>(v)].push_back(witness);
      // The obstacle is set one step ahead to the vertex sharing v's
      // horizontal edge, making the new shadow ray horizontal. When v is
      // the first vertex that edge does not exist, but the sweep ends
      // right here and the entry could never be consulted, so the list
      // transfer alone suffices.
      if (v > 0) push_entry(v, v - 1, /*dummy=*/false);
    }
    // Delete every entry that sees v except the rightmost such entry. The
    // seers form a prefix of the stack because rays sit lower toward the
    // top.
    std::size_t seers = 0;
    for (MsIt it = ms_.begin(); it != ms_.end() && ms_sees(*it, v); ++it) ++seers;
    MsIt it = ms_.begin();
    for (std::size_t i = 0; i + 1 < seers; ++i) {
      const MsIt next = std::next(it);
      remove_entry(it, Removal::Delete);
      it = next;
    }
  }

  void process_vertex(VertexId v) {
    sweep_x_ = t_.vertex(v).x;
    const auto horizon = uhs_.push(v);
    switch (t_.vclass(v)) {
      case VertexClass::LeftConvex:
        ++c_.events_left_convex;
        handle_left_convex(v, *horizon);
        break;
      case VertexClass::RightConvex:
        ++c_.events_right_convex;
        break;
      case VertexClass::LeftReflex:
        ++c_.events_left_reflex;
        handle_left_reflex(v);
        break;
      case VertexClass::RightReflex:
        ++c_.events_right_reflex;
        handle_right_reflex(v);
        break;
    }
    post_event([&](SweepEventView& view) {
      view.kind = SweepEventView::Kind::Vertex;
      view.vertex = v;
      view.vertex_class = t_.vclass(v);
    }, v - 1);
  }

  void process_intersection(VertexId next_vertex) {
    const HeapEvent ev = heap_.pop_top();
    ++c_.heap_pop_max;
    ev.upper->ev_down = -1;
    ev.lower->ev_up = -1;
    sweep_x_ = ev.p.x;

    const auto range = t_.height_range_at(ev.p.x);
    const bool above = ev.p.y >= range.y_low;  // grazing counts as above
    if (above) {
      ++c_.intersections_fired;
      // All rays through the crossing form a contiguous block; keep only
      // the bottommost (rightmost vertex).
      MsIt first = ev.upper;
      while (first != ms_.begin() && ray_through(*std::prev(first), ev.p)) --first;
      MsIt last = ev.lower;
      while (std::next(last) != ms_.end() && ray_through(*std::next(last), ev.p)) ++last;
      for (MsIt it = first; it != last;) {
        const MsIt next = std::next(it);
        remove_entry(it, Removal::Delete);
        it = next;
      }
    } else {
      ++c_.intersections_discarded;
    }

    post_event([&](SweepEventView& view) {
      view.kind = SweepEventView::Kind::Intersection;
      view.point = ev.p;
      view.fired = above;
    }, next_vertex);
  }

  template <typename Fill>
  void post_event(Fill&& fill, VertexId next_vertex) {
    const std::size_t k = ms_.size();
    // Every stack entry carries a non-empty list, so k + t == alive_.
    assert(alive_ >= k);
    if (alive_ < last_alive_) ++c_.kt_violations;
    last_alive_ = alive_;
    if (heap_.size() >= std::max<std::size_t>(1, k)) ++c_.heap_bound_violations;

    if (!hooks_ || !hooks_->after_event) return;
    SweepEventView view;
    fill(view);
    view.ms.reserve(k);
    for (const MSEntry& e : ms_) view.ms.push_back(ShadowRay{e.vertex, e.obstacle, e.dummy});
    view.heap_size = heap_.size();
    view.stack_size = k;
    view.retired_guards = alive_ - k;
    if (!heap_.empty() && (next_vertex < 0 || heap_.top().p.x >= t_.vertex(next_vertex).x)) {
      view.next_x = heap_.top().p.x;
    } else if (next_vertex >= 0) {
      view.next_x = t_.vertex(next_vertex).x;
    }
    hooks_->after_event(view);
  }

  const Terrain& t_;
  const SweepHooks* hooks_;
  UpperHullStack uhs_;
  MsList ms_;  // front = top = leftmost, lowest
  AddressableHeap<HeapEvent, EventLess> heap_;
  std::vector<std::vector<VertexId>> lists_;
  SweepCounters c_;
  Rational sweep_x_;
  std::size_t alive_ = 0;       // vertices with non-empty lists
  std::size_t last_alive_ = 0;  // k + t after the previous event
};

}  // namespace

SweepResult run_left_sweep(const Terrain& t, const SweepHooks* hooks) {
  return LeftSweep(t, hooks).run();
}

std::vector<VertexId> extract_first_witnesses(const SweepResult& r) {
  std::vector<VertexId> firsts;
  firsts.reserve(r.lists.size());
  for (const auto& list : r.lists) {
    if (list.empty()) throw std::logic_error("extract_first_witnesses: empty guard list");
    firsts.push_back(list.front());
  }
  return firsts;
}

std::string trace_line(const SweepEventView& view) {
  std::string s;
  if (view.kind == SweepEventView::Kind::Vertex) {
    s = "v " + std::to_string(view.vertex) + " " + to_string(view.vertex_class);
  } else {
    s = "x " + view.point->x.str() + " " + view.point->y.str() + (view.fired ? " fired" : " dropped");
  }
  s += " | ms";
  if (view.ms.empty()) {
    s += " -";
  } else {
    for (const ShadowRay& r : view.ms) {
      s += ' ';
      s += std::to_string(r.origin);
      s += ':';
      s += std::to_string(r.obstacle);
      if (r.dummy) s += '*';
    }
  }
  s += " | h " + std::to_string(view.heap_size);
  return s;
}

}  // namespace otg
