#pragma once

#include <vector>

#include "hdakit/ipomset.hpp"

namespace hdakit {

/// Every ipomset subsumed by p (p included), sorted.
std::vector<Ipomset> refinements(const Ipomset& p);

/// Downward subsumption closure X↓, sorted and deduplicated.
std::vector<Ipomset> down_close(const std::vector<Ipomset>& xs);

/// A way of writing m as left * right.
struct Division {
  Ipomset left;
  Ipomset right;

  friend bool operator==(const Division&, const Division&) = default;
  friend auto operator<=>(const Division&, const Division&) = default;
};

/// All (P, Q) with P * Q ≅ m, sorted. Each event of m goes to the left part,
/// the glued interface, or the right part.
std::vector<Division> enumerate_divisions(const Ipomset& m);

}  // namespace hdakit
