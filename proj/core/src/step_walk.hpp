#pragma once

// Greedy execution of an interval order: start everything whose
// predecessors are done, then terminate everything that no longer has an
// unstarted non-successor. The resulting alternating step list is the sparse
// step decomposition.

#include <algorithm>
#include <vector>

#include "hdakit/ipomset.hpp"

namespace hdakit::detail {

struct OrderView {
  std::size_t n = 0;
  EventSet source = 0;
  EventSet target = 0;
  const std::vector<EventSet>* succ = nullptr;
  const std::vector<EventSet>* pred = nullptr;
  // Event order, only consulted on pairs that are concurrent.
  const std::vector<EventSet>* evord = nullptr;
};

struct WalkStep {
  bool is_starter = true;
  std::vector<std::size_t> loset;  // event indices in event order
  EventSet active = 0;             // event indices
};

struct Walk {
  std::vector<std::size_t> initial;  // sources in event order
  std::vector<WalkStep> steps;
  bool complete = false;
};

inline void sort_by_event_order(std::vector<std::size_t>& events, const OrderView& v) {
  std::sort(events.begin(), events.end(), [&](std::size_t a, std::size_t b) {
    if (has((*v.evord)[a], b)) return true;
    if (has((*v.evord)[b], a)) return false;
    return a < b;
  });
}

inline Walk walk_steps(const OrderView& v) {
  Walk w;
  const EventSet all = all_of(v.n);
  EventSet started = v.source;
  EventSet done = 0;
  w.initial = members_of(v.source);
  sort_by_event_order(w.initial, v);

  auto active_list = [&] {
    auto act = members_of(started & ~done);
    sort_by_event_order(act, v);
    return act;
  };

  for (;;) {
    bool progressed = false;
    EventSet start_now = 0;
    for (std::size_t x = 0; x < v.n; ++x) {
      if (!has(started, x) && ((*v.pred)[x] & ~done) == 0) start_now |= bit(x);
    }
    if (start_now != 0) {
      started |= start_now;
      w.steps.push_back({true, active_list(), start_now});
      progressed = true;
    }
    EventSet stop_now = 0;
    for (std::size_t x = 0; x < v.n; ++x) {
      if (!has(started & ~done & ~v.target, x)) continue;
      const EventSet must_have_started = all & ~(*v.succ)[x] & ~bit(x);
      if ((must_have_started & ~started) == 0) stop_now |= bit(x);
    }
    if (stop_now != 0) {
      w.steps.push_back({false, active_list(), stop_now});
      done |= stop_now;
      progressed = true;
    }
    if (!progressed) break;
  }
  w.complete = started == all && done == (all & ~v.target);
  return w;
}

}  // namespace hdakit::detail
