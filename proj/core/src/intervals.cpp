#include "hdakit/intervals.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "hdakit/errors.hpp"
#include "step_walk.hpp"

namespace hdakit {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw MalformedInterval("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 10;
  std::int64_t mantissa = 0;
  std::int64_t scale = 1;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
      throw MalformedInterval("not a decimal number: '" + std::string(text) + "'");
    }
    if (mantissa > kLimit || (seen_point && scale > kLimit)) {
      throw MalformedInterval("decimal has too many digits: '" + std::string(text) + "'");
    }
    seen_digit = true;
    mantissa = mantissa * 10 + (c - '0');
    if (seen_point) scale *= 10;
  }
  if (!seen_digit) throw MalformedInterval("not a decimal number: '" + std::string(text) + "'");
  return Rational(negative ? -mantissa : mantissa, scale);
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

__extension__ typedef __int128 Wide;

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide lhs = static_cast<Wide>(a.num) * b.den;
  const Wide rhs = static_cast<Wide>(b.num) * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

IntervalRep interval_representation(const Ipomset& p) {
  const std::size_t n = p.size();
  std::vector<EventSet> succ(n), pred(n), ev(n);
  for (std::size_t i = 0; i < n; ++i) {
    succ[i] = p.successors(i);
    pred[i] = p.predecessors(i);
    ev[i] = p.later_in_event_order(i);
  }
  const detail::OrderView view{n, p.sources(), p.targets(), &succ, &pred, &ev};
  const auto walk = detail::walk_steps(view);
  const auto last = static_cast<std::int64_t>(walk.steps.size() + 1);

  IntervalRep rep;
  rep.labels = p.labels();
  rep.intervals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rep.intervals[i].source = p.is_source(i);
    rep.intervals[i].target = p.is_target(i);
    rep.intervals[i].begin = Rational(0);
    rep.intervals[i].end = Rational(last);
  }
  for (std::size_t k = 0; k < walk.steps.size(); ++k) {
    const auto time = Rational(static_cast<std::int64_t>(k + 1));
    for (std::size_t e : members_of(walk.steps[k].active)) {
      (walk.steps[k].is_starter ? rep.intervals[e].begin : rep.intervals[e].end) = time;
    }
  }

  // Rank: a linear extension of the event order, smallest index first.
  rep.rank.assign(n, 0);
  EventSet placed = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (has(placed, i)) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j) {
        if (!has(placed, j) && p.event_before(j, i)) minimal = false;
      }
      if (minimal) {
        rep.rank[i] = r;
        placed |= bit(i);
        break;
      }
    }
  }
  return rep;
}

Ipomset from_intervals(const IntervalRep& rep) {
  const std::size_t n = rep.labels.size();
  if (rep.intervals.size() != n || rep.rank.size() != n) {
    throw MalformedInterval("labels, intervals and ranks must have the same length");
  }
  RawIposet raw;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& iv = rep.intervals[i];
    if (iv.begin > iv.end) {
      throw MalformedInterval("interval of event #" + std::to_string(i) + " ends before it begins");
    }
    raw.add_event(rep.labels[i], iv.source, iv.target);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rep.intervals[i].end < rep.intervals[j].begin) raw.prec.emplace_back(i, j);
      if (rep.rank[i] < rep.rank[j] || (rep.rank[i] == rep.rank[j] && i < j)) raw.evord.emplace_back(i, j);
    }
  }
  return canonicalize(raw);
}

}  // namespace hdakit
