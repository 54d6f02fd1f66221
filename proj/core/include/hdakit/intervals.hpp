#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hdakit/ipomset.hpp"

namespace hdakit {

/// Exact rational number with 64-bit numerator and positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  /// Parses "12", "-0.375", "3.", ".5". Throws MalformedInterval.
  static Rational parse_decimal(std::string_view text);
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return (a <=> b) == 0; }
};

struct Interval {
  Rational begin;
  Rational end;
  bool source = false;  // already active at the start
  bool target = false;  // still active at the end
};

/// Interval representation of an ipomset: x precedes y iff end(x) < begin(y).
/// Intervals alone do not determine the event order, so `rank` carries a
/// total order used for concurrent pairs (smaller rank comes first).
struct IntervalRep {
  std::vector<Label> labels;
  std::vector<Interval> intervals;
  std::vector<std::size_t> rank;
};

/// Integer endpoints from the sparse step decomposition: the k-th step sits
/// at time k+1, source events begin at 0 and target events end at steps+1.
IntervalRep interval_representation(const Ipomset& p);

/// Throws MalformedInterval (begin > end, size mismatch) or AxiomViolation.
Ipomset from_intervals(const IntervalRep& rep);

}  // namespace hdakit
