#include "hdakit/language.hpp"

#include <algorithm>
#include <tuple>

#include "hdakit/errors.hpp"
#include "hdakit/refine.hpp"
#include "hdakit/steps.hpp"
#include "hdakit/text.hpp"

namespace hdakit {

namespace {

const Quotient kEmptyQuotient;

void sort_unique(std::vector<Ipomset>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

std::vector<Ipomset> keys_of(const std::map<Ipomset, Quotient>& m) {
  std::vector<Ipomset> out;
  out.reserve(m.size());
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

QuotientFamily family_of(const std::map<Ipomset, Quotient>& m) {
  QuotientFamily f;
  f.values.push_back({});
  for (const auto& [k, v] : m) {
    f.entries.emplace_back(k, v);
    f.values.push_back(v);
  }
  std::sort(f.values.begin(), f.values.end());
  f.values.erase(std::unique(f.values.begin(), f.values.end()), f.values.end());
  return f;
}

}  // namespace

LanguageSet LanguageSet::from_generators(std::vector<Ipomset> generators, std::set<Label> alphabet) {
  LanguageSet l;
  auto members = down_close(generators);
  l.build(std::move(generators), std::move(members), std::move(alphabet));
  return l;
}

LanguageSet LanguageSet::from_closed(std::vector<Ipomset> members, std::set<Label> alphabet) {
  sort_unique(members);
  for (const auto& m : members) {
    for (const auto& r : refinements(m)) {
      if (!std::binary_search(members.begin(), members.end(), r)) {
        throw NotDownClosed("language is not closed under subsumption: " + format(r) +
                            " refines " + format(m) + " but is missing");
      }
    }
  }
  LanguageSet l;
  auto generators = members;
  l.build(std::move(generators), std::move(members), std::move(alphabet));
  return l;
}

void LanguageSet::build(std::vector<Ipomset> generators, std::vector<Ipomset> members,
                        std::set<Label> alphabet) {
  sort_unique(generators);
  sort_unique(members);
  std::set<Label> used;
  for (const auto& m : members) used.insert(m.labels().begin(), m.labels().end());
  if (alphabet.empty()) {
    alphabet = used;
  } else {
    for (const auto& a : used) {
      if (!alphabet.contains(a)) throw Error("label '" + a + "' is not in the declared alphabet");
    }
  }
  generators_ = std::move(generators);
  members_ = std::move(members);
  alphabet_ = std::move(alphabet);

  by_prefix_.clear();
  by_suffix_.clear();
  for (const auto& m : members_) {
    for (auto& d : enumerate_divisions(m)) {
      by_prefix_[d.left].push_back(d.right);
      by_suffix_[d.right].push_back(std::move(d.left));
    }
  }
  for (auto& [k, v] : by_prefix_) sort_unique(v);
  for (auto& [k, v] : by_suffix_) sort_unique(v);
}

bool LanguageSet::contains(const Ipomset& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

const Quotient& LanguageSet::prefix_quotient(const Ipomset& p) const {
  auto it = by_prefix_.find(p);
  return it == by_prefix_.end() ? kEmptyQuotient : it->second;
}

const Quotient& LanguageSet::suffix_quotient(const Ipomset& p) const {
  auto it = by_suffix_.find(p);
  return it == by_suffix_.end() ? kEmptyQuotient : it->second;
}

std::vector<Ipomset> LanguageSet::prefixes() const { return keys_of(by_prefix_); }
std::vector<Ipomset> LanguageSet::suffixes() const { return keys_of(by_suffix_); }

const Quotient& prefix_quotient(const LanguageSet& l, const Ipomset& p) { return l.prefix_quotient(p); }
const Quotient& suffix_quotient(const LanguageSet& l, const Ipomset& p) { return l.suffix_quotient(p); }
std::vector<Ipomset> prefixes(const LanguageSet& l) { return l.prefixes(); }
std::vector<Ipomset> suffixes(const LanguageSet& l) { return l.suffixes(); }

QuotientFamily suffix_quotient_family(const LanguageSet& l) {
  std::map<Ipomset, Quotient> m;
  for (const auto& p : l.prefixes()) m.emplace(p, l.prefix_quotient(p));
  return family_of(m);
}

QuotientFamily prefix_quotient_family(const LanguageSet& l) {
  std::map<Ipomset, Quotient> m;
  for (const auto& p : l.suffixes()) m.emplace(p, l.suffix_quotient(p));
  return family_of(m);
}

bool weak_equiv(const Ipomset& p, const Ipomset& q, const LanguageSet& l) {
  return fin(p) == fin(q) && l.prefix_quotient(p) == l.prefix_quotient(q);
}

std::optional<EventSet> strong_equiv_counterexample(const Ipomset& p, const Ipomset& q,
                                                    const LanguageSet& l) {
  const auto sig = fin(p);
  if (sig != fin(q)) return EventSet{0};
  // Subsets of the rfin positions, the empty set first.
  for (EventSet a = 0;; a = (a - sig.active) & sig.active) {
    const auto pa = remove_targets(p, target_positions_to_events(p, a));
    const auto qa = remove_targets(q, target_positions_to_events(q, a));
    if (l.prefix_quotient(pa) != l.prefix_quotient(qa)) return a;
    if (a == sig.active) break;
  }
  return std::nullopt;
}

bool strong_equiv(const Ipomset& p, const Ipomset& q, const LanguageSet& l) {
  return !strong_equiv_counterexample(p, q, l).has_value();
}

SwapVerdict is_swap_invariant(const LanguageSet& l) {
  auto pre = l.prefixes();
  auto key = [](const Ipomset& x) {
    return std::make_tuple(x.size() - count(x.targets()), x.size());
  };
  std::stable_sort(pre.begin(), pre.end(),
                   [&](const Ipomset& a, const Ipomset& b) { return key(a) < key(b); });

  SwapVerdict v;
  for (const auto& q : pre) {
    const auto& qq = l.prefix_quotient(q);
    for (const auto& p : pre) {
      if (p == q || key(p) != key(q) || !subsumes(p, q)) continue;
      const auto& pq = l.prefix_quotient(p);
      if (pq != qq) {
        v.invariant = false;
        v.witness.emplace(p, q);
        v.p_quotient = pq;
        v.q_quotient = qq;
        return v;
      }
    }
  }
  return v;
}

}  // namespace hdakit
