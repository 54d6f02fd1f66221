#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hdakit/ipomset.hpp"

namespace hdakit {

/// A finite set of ipomsets, sorted by canonical order.
using Quotient = std::vector<Ipomset>;

/// Finite language closed under subsumption.
///
/// All divisions of all members are computed once at construction, so
/// quotients are table lookups afterwards.
class LanguageSet {
 public:
  LanguageSet() = default;

  /// Down-closes the generators. An empty alphabet means "labels used".
  static LanguageSet from_generators(std::vector<Ipomset> generators, std::set<Label> alphabet = {});
  /// Throws NotDownClosed if some refinement of a member is missing.
  static LanguageSet from_closed(std::vector<Ipomset> members, std::set<Label> alphabet = {});

  const std::vector<Ipomset>& members() const { return members_; }
  const std::vector<Ipomset>& generators() const { return generators_; }
  const std::set<Label>& alphabet() const { return alphabet_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Ipomset& p) const;

  /// P\L and L/P.
  const Quotient& prefix_quotient(const Ipomset& p) const;
  const Quotient& suffix_quotient(const Ipomset& p) const;

  /// {P | P\L ≠ ∅} and {P | L/P ≠ ∅}, sorted.
  std::vector<Ipomset> prefixes() const;
  std::vector<Ipomset> suffixes() const;

 private:
  void build(std::vector<Ipomset> generators, std::vector<Ipomset> members, std::set<Label> alphabet);

  std::vector<Ipomset> generators_;
  std::vector<Ipomset> members_;
  std::set<Label> alphabet_;
  std::map<Ipomset, Quotient> by_prefix_;
  std::map<Ipomset, Quotient> by_suffix_;
};

const Quotient& prefix_quotient(const LanguageSet& l, const Ipomset& p);
const Quotient& suffix_quotient(const LanguageSet& l, const Ipomset& p);
std::vector<Ipomset> prefixes(const LanguageSet& l);
std::vector<Ipomset> suffixes(const LanguageSet& l);

struct QuotientFamily {
  /// Representative ↦ quotient, over every P with a nonempty quotient.
  std::vector<std::pair<Ipomset, Quotient>> entries;
  /// Distinct quotient values, the empty quotient included, sorted.
  std::vector<Quotient> values;
};

/// suff(L) = {P\L}.
QuotientFamily suffix_quotient_family(const LanguageSet& l);
/// pref(L) = {L/P}.
QuotientFamily prefix_quotient_family(const LanguageSet& l);

/// P ∼_L Q: equal signatures and equal prefix quotients.
bool weak_equiv(const Ipomset& p, const Ipomset& q, const LanguageSet& l);

/// P ≈_L Q: equal signatures and (P−A)\L = (Q−A)\L for every A ⊆ rfin.
bool strong_equiv(const Ipomset& p, const Ipomset& q, const LanguageSet& l);

/// Why P and Q are not strongly equivalent: nullopt if they are, otherwise
/// the positions of T_P that separate them (the empty set when the
/// signatures differ or the plain quotients already differ).
std::optional<EventSet> strong_equiv_counterexample(const Ipomset& p, const Ipomset& q,
                                                    const LanguageSet& l);

struct SwapVerdict {
  bool invariant = true;
  /// P ⊑ Q with P\L ≠ Q\L.
  std::optional<std::pair<Ipomset, Ipomset>> witness;
  Quotient p_quotient;
  Quotient q_quotient;
};

/// Decides swap-invariance. Witnesses are searched with Q ordered by
/// (completed events, size, canonical order), so the first one reported is
/// the earliest point at which the language forgets concurrency.
SwapVerdict is_swap_invariant(const LanguageSet& l);

}  // namespace hdakit
