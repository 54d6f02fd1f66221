#include "hdakit/ipomset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hdakit/errors.hpp"
#include "step_walk.hpp"

namespace hdakit {

std::vector<std::size_t> members_of(EventSet s) {
  std::vector<std::size_t> out;
  out.reserve(count(s));
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

Loset Loset::without(EventSet positions) const {
  Loset out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!has(positions, i)) out.labels.push_back(labels[i]);
  }
  return out;
}

std::size_t RawIposet::add_event(Label label, bool in_source, bool in_target) {
  const std::size_t id = labels.size();
  if (id >= kMaxEvents) throw AxiomViolation("too many events (limit 64)");
  labels.push_back(std::move(label));
  if (in_source) source |= bit(id);
  if (in_target) target |= bit(id);
  return id;
}

namespace {

void close_transitively(std::vector<EventSet>& rel) {
  const std::size_t n = rel.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (has(rel[i], k)) rel[i] |= rel[k];
    }
  }
}

std::vector<EventSet> relation_from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    const char* what) {
  std::vector<EventSet> rel(n, 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw AxiomViolation(std::string(what) + " pair refers to an unknown event");
    }
    rel[a] |= bit(b);
  }
  return rel;
}

std::string describe_pair(const RawIposet& raw, std::size_t a, std::size_t b) {
  std::ostringstream os;
  os << "events #" << a << " (" << raw.labels[a] << ") and #" << b << " (" << raw.labels[b] << ")";
  return os.str();
}

}  // namespace

Ipomset canonicalize(const RawIposet& raw) {
  const std::size_t n = raw.labels.size();
  if (n > kMaxEvents) throw AxiomViolation("too many events (limit 64)");
  const EventSet all = all_of(n);
  if ((raw.source & ~all) != 0 || (raw.target & ~all) != 0) {
    throw AxiomViolation("interface refers to an unknown event");
  }
  for (const auto& l : raw.labels) {
    if (l.empty()) throw AxiomViolation("empty label");
  }

  auto succ = relation_from_pairs(n, raw.prec, "precedence");
  auto ev = relation_from_pairs(n, raw.evord, "event order");
  close_transitively(succ);
  close_transitively(ev);
  for (std::size_t i = 0; i < n; ++i) {
    if (has(succ[i], i)) throw AxiomViolation("precedence is cyclic at event #" + std::to_string(i));
    if (has(ev[i], i)) throw AxiomViolation("event order is cyclic at event #" + std::to_string(i));
  }
  std::vector<EventSet> pred(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : members_of(succ[i])) pred[j] |= bit(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!has(succ[i] | pred[i] | ev[i], j) && !has(ev[j], i)) {
        throw AxiomViolation(describe_pair(raw, i, j) +
                             " are neither ordered by precedence nor by event order");
      }
    }
  }
  for (std::size_t s : members_of(raw.source)) {
    if (pred[s] != 0) throw AxiomViolation("source event #" + std::to_string(s) + " is not minimal");
  }
  for (std::size_t t : members_of(raw.target)) {
    if (succ[t] != 0) throw AxiomViolation("target event #" + std::to_string(t) + " is not maximal");
  }
  // Interval orders are exactly the posets whose predecessor sets form a chain.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((pred[i] & ~pred[j]) != 0 && (pred[j] & ~pred[i]) != 0) {
        throw AxiomViolation("precedence is not an interval order (2+2 pattern at " +
                             describe_pair(raw, i, j) + ")");
      }
    }
  }

  std::vector<EventSet> essential(n, 0);
  for (std::size_t i = 0; i < n; ++i) essential[i] = ev[i] & ~succ[i] & ~pred[i];
  close_transitively(essential);

  detail::OrderView view{n, raw.source, raw.target, &succ, &pred, &essential};
  const auto walk = detail::walk_steps(view);
  if (!walk.complete) throw AxiomViolation("iposet admits no step decomposition");

  std::vector<std::size_t> order = walk.initial;
  for (const auto& st : walk.steps) {
    if (!st.is_starter) continue;
    for (std::size_t e : st.loset) {
      if (has(st.active, e)) order.push_back(e);
    }
  }
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;
  auto remap = [&](EventSet s) {
    EventSet out = 0;
    for (std::size_t e : members_of(s)) out |= bit(rank[e]);
    return out;
  };

  Ipomset p;
  p.labels_.resize(n);
  p.succ_.assign(n, 0);
  p.pred_.assign(n, 0);
  p.evord_.assign(n, 0);
  for (std::size_t old = 0; old < n; ++old) {
    const std::size_t k = rank[old];
    p.labels_[k] = raw.labels[old];
    p.succ_[k] = remap(succ[old]);
    p.pred_[k] = remap(pred[old]);
    p.evord_[k] = remap(essential[old]);
  }
  p.source_ = remap(raw.source);
  p.target_ = remap(raw.target);
  return p;
}

std::strong_ordering operator<=>(const Ipomset& a, const Ipomset& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (auto c = a.labels_ <=> b.labels_; c != 0) return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  if (auto c = a.target_ <=> b.target_; c != 0) return c;
  if (auto c = a.succ_ <=> b.succ_; c != 0) return c;
  return a.evord_ <=> b.evord_;
}

std::size_t Ipomset::hash() const {
  std::size_t h = std::hash<std::size_t>{}(size());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& l : labels_) mix(std::hash<std::string>{}(l));
  mix(source_);
  mix(target_);
  for (auto r : succ_) mix(r);
  for (auto r : evord_) mix(r);
  return h;
}

std::vector<std::size_t> Ipomset::source_events() const {
  // Canonical numbering lists sources first, already in event order.
  return members_of(source_);
}

std::vector<std::size_t> Ipomset::target_events() const {
  auto out = members_of(target_);
  std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) {
    if (event_before(a, b)) return true;
    if (event_before(b, a)) return false;
    return a < b;
  });
  return out;
}

Loset Ipomset::source_loset() const {
  Loset u;
  for (std::size_t e : source_events()) u.labels.push_back(labels_[e]);
  return u;
}

Loset Ipomset::target_loset() const {
  Loset u;
  for (std::size_t e : target_events()) u.labels.push_back(labels_[e]);
  return u;
}

bool Ipomset::is_discrete() const {
  return std::all_of(succ_.begin(), succ_.end(), [](EventSet s) { return s == 0; });
}

RawIposet to_raw(const Ipomset& p) {
  RawIposet raw;
  for (std::size_t i = 0; i < p.size(); ++i) raw.add_event(p.label(i), p.is_source(i), p.is_target(i));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j : members_of(p.successors(i))) raw.prec.emplace_back(i, j);
    for (std::size_t j : members_of(p.later_in_event_order(i))) raw.evord.emplace_back(i, j);
  }
  return raw;
}

bool is_isomorphic(const Ipomset& p, const Ipomset& q) { return p == q; }

namespace {

struct SubsumptionSearch {
  const Ipomset& p;
  const Ipomset& q;
  std::vector<std::size_t> image;
  EventSet used = 0;

  bool consistent(std::size_t i, std::size_t j) const {
    if (p.label(i) != q.label(j) || p.is_source(i) != q.is_source(j) ||
        p.is_target(i) != q.is_target(j)) {
      return false;
    }
    for (std::size_t k = 0; k < i; ++k) {
      const std::size_t fk = image[k];
      if (q.precedes(fk, j) && !p.precedes(k, i)) return false;
      if (q.precedes(j, fk) && !p.precedes(i, k)) return false;
      if (p.concurrent(k, i)) {
        if (p.event_before(k, i) && !q.event_before(fk, j)) return false;
        if (p.event_before(i, k) && !q.event_before(j, fk)) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == p.size()) return true;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (has(used, j) || !consistent(i, j)) continue;
      image[i] = j;
      used |= bit(j);
      if (extend(i + 1)) return true;
      used &= ~bit(j);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_subsumption(const Ipomset& p, const Ipomset& q) {
  if (p.size() != q.size() || count(p.sources()) != count(q.sources()) ||
      count(p.targets()) != count(q.targets())) {
    return std::nullopt;
  }
  auto lp = p.labels();
  auto lq = q.labels();
  std::sort(lp.begin(), lp.end());
  std::sort(lq.begin(), lq.end());
  if (lp != lq) return std::nullopt;
  SubsumptionSearch s{p, q, std::vector<std::size_t>(p.size()), 0};
  if (!s.extend(0)) return std::nullopt;
  return s.image;
}

bool subsumes(const Ipomset& p, const Ipomset& q) { return find_subsumption(p, q).has_value(); }

Ipomset glue(const Ipomset& p, const Ipomset& q) {
  const auto tp = p.target_events();
  const auto sq = q.source_events();
  bool match = tp.size() == sq.size();
  for (std::size_t k = 0; match && k < tp.size(); ++k) match = p.label(tp[k]) == q.label(sq[k]);
  if (!match) {
    throw InterfaceMismatch("target interface of the left operand does not match the source "
                            "interface of the right operand");
  }

  RawIposet raw = to_raw(p);
  raw.target = 0;
  std::vector<std::size_t> qmap(q.size());
  for (std::size_t k = 0; k < sq.size(); ++k) qmap[sq[k]] = tp[k];
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (!q.is_source(j)) qmap[j] = raw.add_event(q.label(j));
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q.is_target(j)) raw.target |= bit(qmap[j]);
    for (std::size_t k : members_of(q.successors(j))) raw.prec.emplace_back(qmap[j], qmap[k]);
    for (std::size_t k : members_of(q.later_in_event_order(j))) raw.evord.emplace_back(qmap[j], qmap[k]);
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.is_target(i)) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (!q.is_source(j)) raw.prec.emplace_back(i, qmap[j]);
    }
  }
  return canonicalize(raw);
}

namespace {

Ipomset discrete(const Loset& u, EventSet source, EventSet target) {
  RawIposet raw;
  for (std::size_t i = 0; i < u.size(); ++i) raw.add_event(u.labels[i], has(source, i), has(target, i));
  for (std::size_t i = 0; i + 1 < u.size(); ++i) raw.evord.emplace_back(i, i + 1);
  return canonicalize(raw);
}

void check_positions(const Loset& u, EventSet positions) {
  if ((positions & ~all_of(u.size())) != 0) throw std::out_of_range("position outside the loset");
}

}  // namespace

Ipomset identity(const Loset& u) {
  const EventSet all = all_of(u.size());
  return discrete(u, all, all);
}

Ipomset starter(const Loset& u, EventSet positions) {
  check_positions(u, positions);
  const EventSet all = all_of(u.size());
  return discrete(u, all & ~positions, all);
}

Ipomset terminator(const Loset& u, EventSet positions) {
  check_positions(u, positions);
  const EventSet all = all_of(u.size());
  return discrete(u, all, all & ~positions);
}

EventSet rfin(const Ipomset& p) { return p.targets() & ~p.sources(); }

Ipomset restrict_events(const Ipomset& p, EventSet keep, EventSet source, EventSet target) {
  RawIposet raw;
  std::vector<std::size_t> index(p.size(), 0);
  for (std::size_t i : members_of(keep & p.events())) {
    index[i] = raw.add_event(p.label(i), has(source, i), has(target, i));
  }
  for (std::size_t i : members_of(keep & p.events())) {
    for (std::size_t j : members_of(p.successors(i) & keep)) raw.prec.emplace_back(index[i], index[j]);
    for (std::size_t j : members_of(p.later_in_event_order(i) & keep)) raw.evord.emplace_back(index[i], index[j]);
  }
  return canonicalize(raw);
}

Ipomset remove_targets(const Ipomset& p, EventSet events) {
  if ((events & ~rfin(p)) != 0) {
    throw NotRemovable("only target events that are not source events can be removed");
  }
  const EventSet keep = p.events() & ~events;
  return restrict_events(p, keep, p.sources(), p.targets() & keep);
}

EventSet target_positions_to_events(const Ipomset& p, EventSet positions) {
  const auto tev = p.target_events();
  EventSet out = 0;
  for (std::size_t k : members_of(positions)) {
    if (k >= tev.size()) throw std::out_of_range("target position out of range");
    out |= bit(tev[k]);
  }
  return out;
}

EventSet events_to_target_positions(const Ipomset& p, EventSet events) {
  const auto tev = p.target_events();
  EventSet out = 0;
  for (std::size_t k = 0; k < tev.size(); ++k) {
    if (has(events, tev[k])) out |= bit(k);
  }
  return out;
}

}  // namespace hdakit
