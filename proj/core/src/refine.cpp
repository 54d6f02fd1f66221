#include "hdakit/refine.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace hdakit {

namespace {

bool is_interval(const std::vector<EventSet>& pred) {
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = i + 1; j < pred.size(); ++j) {
      if ((pred[i] & ~pred[j]) != 0 && (pred[j] & ~pred[i]) != 0) return false;
    }
  }
  return true;
}

std::vector<EventSet> predecessors_of(const std::vector<EventSet>& succ) {
  std::vector<EventSet> pred(succ.size(), 0);
  for (std::size_t i = 0; i < succ.size(); ++i) {
    for (std::size_t j : members_of(succ[i])) pred[j] |= bit(i);
  }
  return pred;
}

// Adds i < j and closes: everything up to i now precedes everything from j.
std::vector<EventSet> add_precedence(const std::vector<EventSet>& succ,
                                     const std::vector<EventSet>& pred, std::size_t i,
                                     std::size_t j) {
  auto out = succ;
  const EventSet upper = succ[j] | bit(j);
  for (std::size_t k : members_of(pred[i] | bit(i))) out[k] |= upper;
  return out;
}

}  // namespace

std::vector<Ipomset> refinements(const Ipomset& p) {
  const std::size_t n = p.size();
  std::vector<EventSet> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = p.successors(i);

  // Explore every precedence relation reachable by adding one pair at a time;
  // intermediate non-interval posets are kept as stepping stones.
  std::set<std::vector<EventSet>> seen{start};
  std::deque<std::vector<EventSet>> queue{start};
  std::set<Ipomset> out;
  while (!queue.empty()) {
    auto succ = std::move(queue.front());
    queue.pop_front();
    const auto pred = predecessors_of(succ);
    if (is_interval(pred)) {
      RawIposet raw = to_raw(p);
      raw.prec.clear();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : members_of(succ[i])) raw.prec.emplace_back(i, j);
      }
      out.insert(canonicalize(raw));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (p.is_target(i)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || p.is_source(j) || has(succ[i] | pred[i], j)) continue;
        auto next = add_precedence(succ, pred, i, j);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Ipomset> down_close(const std::vector<Ipomset>& xs) {
  std::set<Ipomset> out;
  for (const auto& x : xs) {
    if (out.contains(x)) continue;
    for (auto& r : refinements(x)) out.insert(std::move(r));
  }
  return {out.begin(), out.end()};
}

std::vector<Division> enumerate_divisions(const Ipomset& m) {
  const EventSet all = m.events();
  std::set<Division> out;

  auto is_down_set = [&](EventSet s) {
    for (std::size_t x : members_of(s)) {
      if ((m.predecessors(x) & ~s) != 0) return false;
    }
    return true;
  };
  auto is_up_set = [&](EventSet s) {
    for (std::size_t x : members_of(s)) {
      if ((m.successors(x) & ~s) != 0) return false;
    }
    return true;
  };

  // left_only: down-set avoiding targets; right_only: up-set avoiding sources.
  for (EventSet left_only = 0;; left_only = (left_only - all) & all) {
    if ((left_only & m.targets()) == 0 && is_down_set(left_only)) {
      const EventSet rest = all & ~left_only;
      for (EventSet right_only = 0;; right_only = (right_only - rest) & rest) {
        const EventSet iface = rest & ~right_only;
        bool ok = (right_only & m.sources()) == 0 && is_up_set(right_only);
        for (std::size_t x : members_of(iface)) {
          if (!ok) break;
          ok = (m.successors(x) & (iface | left_only)) == 0 && (m.predecessors(x) & right_only) == 0;
        }
        for (std::size_t x : members_of(left_only)) {
          if (!ok) break;
          ok = (m.successors(x) & right_only) == right_only;
        }
        if (ok) {
          Division d{restrict_events(m, left_only | iface, m.sources(), iface),
                     restrict_events(m, iface | right_only, iface, m.targets())};
          if (glue(d.left, d.right) != m) throw std::logic_error("division does not glue back");
          out.insert(std::move(d));
        }
        if (right_only == rest) break;
      }
    }
    if (left_only == all) break;
  }
  return {out.begin(), out.end()};
}

}  // namespace hdakit
