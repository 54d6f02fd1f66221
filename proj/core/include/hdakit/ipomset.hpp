#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hdakit {

using Label = std::string;

/// Bit set over event (or loset position) indices.
using EventSet = std::uint64_t;

inline constexpr std::size_t kMaxEvents = 64;

constexpr EventSet bit(std::size_t i) { return EventSet{1} << i; }
constexpr bool has(EventSet s, std::size_t i) { return (s >> i) & 1U; }
constexpr EventSet all_of(std::size_t n) {
  return n >= kMaxEvents ? ~EventSet{0} : bit(n) - 1;
}
inline std::size_t count(EventSet s) { return static_cast<std::size_t>(std::popcount(s)); }

/// Indices of the set bits, ascending.
std::vector<std::size_t> members_of(EventSet s);

/// A list of concurrently active events; position = rank in the event order.
struct Loset {
  std::vector<Label> labels;

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }
  /// The loset with the given positions removed (higher positions shift down).
  Loset without(EventSet positions) const;

  friend bool operator==(const Loset&, const Loset&) = default;
  friend auto operator<=>(const Loset&, const Loset&) = default;
};

/// Unvalidated iposet description, e.g. straight out of a parser.
/// Orders are given as pairs and need not be transitively closed.
struct RawIposet {
  std::vector<Label> labels;
  EventSet source = 0;
  EventSet target = 0;
  std::vector<std::pair<std::size_t, std::size_t>> prec;
  std::vector<std::pair<std::size_t, std::size_t>> evord;

  std::size_t add_event(Label label, bool in_source = false, bool in_target = false);
};

/// Canonical representative of an ipomset.
///
/// Events are numbered by the step of the unique sparse step decomposition
/// that introduces them (source events first), and by event order within a
/// step. Only the transitive closure of the essential event order (pairs that
/// are concurrent under precedence) is stored, so two values compare equal iff
/// they denote isomorphic iposets. Values are only produced by canonicalize()
/// and the operations built on it.
class Ipomset {
 public:
  /// The empty ipomset.
  Ipomset() = default;

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  EventSet events() const { return all_of(size()); }

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t i) const { return labels_[i]; }

  EventSet sources() const { return source_; }
  EventSet targets() const { return target_; }
  bool is_source(std::size_t i) const { return has(source_, i); }
  bool is_target(std::size_t i) const { return has(target_, i); }

  /// Events strictly after / before `i` in the precedence order.
  EventSet successors(std::size_t i) const { return succ_[i]; }
  EventSet predecessors(std::size_t i) const { return pred_[i]; }
  bool precedes(std::size_t i, std::size_t j) const { return has(succ_[i], j); }
  bool concurrent(std::size_t i, std::size_t j) const {
    return i != j && !precedes(i, j) && !precedes(j, i);
  }

  /// Events after `i` in the stored (essential, closed) event order.
  EventSet later_in_event_order(std::size_t i) const { return evord_[i]; }
  bool event_before(std::size_t i, std::size_t j) const { return has(evord_[i], j); }

  /// Source / target events listed in event order.
  std::vector<std::size_t> source_events() const;
  std::vector<std::size_t> target_events() const;
  Loset source_loset() const;
  Loset target_loset() const;

  /// Discrete: no precedence at all.
  bool is_discrete() const;

  friend bool operator==(const Ipomset&, const Ipomset&) = default;
  friend std::strong_ordering operator<=>(const Ipomset& a, const Ipomset& b);

  std::size_t hash() const;

 private:
  friend Ipomset canonicalize(const RawIposet& raw);

  std::vector<Label> labels_;
  EventSet source_ = 0;
  EventSet target_ = 0;
  std::vector<EventSet> succ_;
  std::vector<EventSet> pred_;
  std::vector<EventSet> evord_;
};

struct IpomsetHash {
  std::size_t operator()(const Ipomset& p) const { return p.hash(); }
};

/// Validate a raw iposet and bring it into canonical form.
/// Throws AxiomViolation.
Ipomset canonicalize(const RawIposet& raw);

/// Raw description of a canonical ipomset (closed orders, canonical indices).
RawIposet to_raw(const Ipomset& p);

bool is_isomorphic(const Ipomset& p, const Ipomset& q);

/// Decides p ⊑ q. On success returns the subsumption as a map from events
/// of p to events of q.
std::optional<std::vector<std::size_t>> find_subsumption(const Ipomset& p, const Ipomset& q);
bool subsumes(const Ipomset& p, const Ipomset& q);

/// Gluing composition p * q. Throws InterfaceMismatch when T_p and S_q are
/// not isomorphic losets.
Ipomset glue(const Ipomset& p, const Ipomset& q);

Ipomset identity(const Loset& u);
/// U↑A: the events at positions A start; the others are sources.
Ipomset starter(const Loset& u, EventSet positions);
/// U↓A: the events at positions A terminate; the others stay targets.
Ipomset terminator(const Loset& u, EventSet positions);

/// T_P − S_P as an event set of p.
EventSet rfin(const Ipomset& p);

/// Sub-iposet on `keep` with the given interfaces (event indices of p).
/// Orders are restricted. Throws AxiomViolation if the result is invalid.
Ipomset restrict_events(const Ipomset& p, EventSet keep, EventSet source, EventSet target);

/// P − A for A ⊆ rfin(P). Throws NotRemovable otherwise.
Ipomset remove_targets(const Ipomset& p, EventSet events);

/// Translate between positions of the target loset T_p and event indices.
EventSet target_positions_to_events(const Ipomset& p, EventSet positions);
EventSet events_to_target_positions(const Ipomset& p, EventSet events);

}  // namespace hdakit

template <>
struct std::hash<hdakit::Ipomset> {
  std::size_t operator()(const hdakit::Ipomset& p) const { return p.hash(); }
};
