#include <algorithm>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "hdakit/errors.hpp"
#include "hdakit/intervals.hpp"
#include "hdakit/refine.hpp"
#include "hdakit/steps.hpp"
#include "hdakit/text.hpp"
#include "oracles.hpp"

using namespace hdakit;
using namespace hdakit::testing;

namespace {

Ipomset ipo(const char* s) { return parse_shorthand(s); }

const std::vector<Ipomset>& corpus() {
  static const auto c = ipomset_corpus(kCorpusSeed, 80, 5);
  return c;
}

// Positions of `a` (positions of U) renumbered inside U − removed.
EventSet squeeze(EventSet a, EventSet removed, std::size_t n) {
  EventSet out = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (has(removed, i)) continue;
    if (has(a, i)) out |= bit(k);
    ++k;
  }
  return out;
}

}  // namespace

TEST_CASE("shorthand parsing and printing") {
  CHECK(format(ipo("ab*")) == "ab•");
  CHECK(format(ipo("[a|b*]")) == "[a∥b•]");
  CHECK(format(ipo("[a|b*]"), {true}) == "[a|b*]");
  CHECK(format(ipo("ε")) == "ε");
  CHECK(ipo("eps") == Ipomset{});
  CHECK(ipo("[a∥b•]") == ipo("[a|b*]"));
  CHECK(format(ipo("{send}{recv}•")) == "{send}{recv}•");

  const auto p = ipo("[•ab|c•]");
  CHECK(p.size() == 3);
  CHECK(count(p.sources()) == 1);
  CHECK(count(p.targets()) == 1);

  CHECK_THROWS_AS(parse_shorthand("a(("), ParseError);
  CHECK_THROWS_AS(parse_shorthand("a•b"), ParseError);
}

TEST_CASE("row order is the event order") {
  CHECK(ipo("[a|b]") != ipo("[b|a]"));
  CHECK(ipo("[a|b]").target_loset() == Loset{});
  CHECK(ipo("[a*|b*]").target_loset() == Loset{{"a", "b"}});
  CHECK(ipo("[b*|a*]").target_loset() == Loset{{"b", "a"}});
}

TEST_CASE("block format round trip") {
  for (const auto& p : corpus()) {
    CHECK(parse_ipo(to_ipo_block(p, "P")).front().value == p);
    CHECK(parse_ipo(to_ipo_block(p, "P", false)).front().value == p);
    CHECK(parse_ipomset_text(format(p)) == p);
    if (auto s = to_shorthand(p, {true})) CHECK(parse_shorthand(*s) == p);
  }
  std::size_t end = 0;
  const std::string two = "ipomset x { events: p:a; } ipomset y { events: q:b, r:c; prec: q<r; }";
  const auto first = parse_ipo_block(two, 0, &end);
  CHECK(first.name == "x");
  CHECK(parse_ipo_block(two, end, &end).value == ipo("bc"));
  CHECK(end == two.size());
}

TEST_CASE("invalid blocks are rejected") {
  CHECK_THROWS_AS(parse_ipomset_text("ipomset p { events: x:a, y:b; prec: x<y, y<x; }"), AxiomViolation);
  // 2+2 is not an interval order
  CHECK_THROWS_AS(
      parse_ipomset_text("ipomset p { events: w:a, x:b, y:c, z:d; prec: w<x, y<z; evord: w<y, w<z, y<x, x<z; }"),
      AxiomViolation);
  // a source must be minimal
  CHECK_THROWS_AS(parse_ipomset_text("ipomset p { events: x:a, y:b; source: y; prec: x<y; }"), AxiomViolation);
  CHECK_THROWS_AS(parse_ipomset_text("ipomset p { events: x:a; prec: x<z; }"), ParseError);
}

TEST_CASE("canonical form is invariant under renaming events") {
  Rng rng(1);
  for (const auto& p : corpus()) {
    const auto base = from_ipomset(p);
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < 4; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(to_ipomset(permute(base, perm)) == p);
    }
  }
}

TEST_CASE("equality agrees with brute-force isomorphism") {
  std::size_t compared = 0;
  for (const auto& p : corpus()) {
    for (const auto& q : corpus()) {
      auto lp = p.labels();
      auto lq = q.labels();
      std::sort(lp.begin(), lp.end());
      std::sort(lq.begin(), lq.end());
      if (lp != lq) continue;
      ++compared;
      CHECK((p == q) == oracle_isomorphic(from_ipomset(p), from_ipomset(q)));
      CHECK((p == q) == is_isomorphic(p, q));
    }
  }
  CHECK(compared > corpus().size());
}

TEST_CASE("subsumption agrees with brute force") {
  for (const auto& p : corpus()) {
    for (const auto& q : corpus()) {
      if (p.size() != q.size()) continue;
      const auto f = find_subsumption(p, q);
      CHECK(f.has_value() == oracle_subsumes(from_ipomset(p), from_ipomset(q)));
      if (!f) continue;
      // the returned map is a subsumption
      for (std::size_t x = 0; x < p.size(); ++x) {
        CHECK(p.label(x) == q.label((*f)[x]));
        for (std::size_t y = 0; y < p.size(); ++y) {
          if (q.precedes((*f)[x], (*f)[y])) CHECK(p.precedes(x, y));
        }
      }
    }
  }
  CHECK(subsumes(ipo("ab"), ipo("[a|b]")));
  CHECK(subsumes(ipo("ba"), ipo("[a|b]")));
  CHECK_FALSE(subsumes(ipo("[a|b]"), ipo("ab")));
  CHECK_FALSE(subsumes(ipo("ab*"), ipo("[a|b]")));
}

TEST_CASE("refinements agree with brute force") {
  for (const auto& p : corpus()) {
    const auto rs = refinements(p);
    CHECK(std::set<Ipomset>(rs.begin(), rs.end()) == oracle_refinements(p));
    CHECK(std::is_sorted(rs.begin(), rs.end()));
    for (const auto& r : rs) CHECK(subsumes(r, p));
  }
  // labelled interval orders on 3 and 4 elements
  CHECK(refinements(ipo("[a|b|c]")).size() == 19);
  CHECK(refinements(ipo("[a|b|c|d]")).size() == 207);
  CHECK(down_close({ipo("[a|b]"), ipo("ab")}).size() == 3);
}

TEST_CASE("divisions agree with brute force") {
  for (const auto& m : corpus()) {
    const auto ds = enumerate_divisions(m);
    std::set<std::pair<Ipomset, Ipomset>> got;
    for (const auto& d : ds) {
      got.emplace(d.left, d.right);
      CHECK(glue(d.left, d.right) == m);
    }
    CHECK(got.size() == ds.size());
    CHECK(got == oracle_divisions(m));
  }
}

TEST_CASE("gluing") {
  CHECK(glue(ipo("a*"), ipo("*ab")) == ipo("ab"));
  CHECK(glue(ipo("a"), ipo("b")) == ipo("ab"));
  CHECK(glue(ipo("[a*|b]"), ipo("*ac")) == parse_ipomset_text(
                                              "ipomset p { events: x:a, y:b, z:c; prec: x<z, y<z; evord: x<y; }"));
  CHECK_THROWS_AS(glue(ipo("a*"), ipo("*b")), InterfaceMismatch);
  CHECK_THROWS_AS(glue(ipo("a*"), ipo("b")), InterfaceMismatch);

  std::vector<Ipomset> pieces;
  for (const auto& m : corpus()) {
    for (const auto& d : enumerate_divisions(m)) {
      pieces.push_back(d.left);
      pieces.push_back(d.right);
    }
  }
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  for (const auto& p : pieces) {
    CHECK(glue(identity(p.source_loset()), p) == p);
    CHECK(glue(p, identity(p.target_loset())) == p);
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < pieces.size(); i += 3) {
    for (const auto& q : pieces) {
      if (pieces[i].target_loset() != q.source_loset()) continue;
      ++pairs;
      CHECK(glue(pieces[i], q) == oracle_glue(pieces[i], q));
    }
  }
  CHECK(pairs > 100);
}

TEST_CASE("starters and terminators") {
  const Loset u{{"a", "b", "c"}};
  const auto st = starter(u, bit(0) | bit(2));
  CHECK(count(st.sources()) == 1);
  CHECK(count(st.targets()) == 3);
  CHECK(st.is_discrete());
  CHECK(starter(u, 0) == identity(u));
  CHECK(terminator(u, 0) == identity(u));
  CHECK(starter(u, bit(1)).source_loset() == Loset{{"a", "c"}});
  CHECK(terminator(u, bit(1)).target_loset() == Loset{{"a", "c"}});

  const std::size_t n = u.size();
  for (EventSet a = 0; a < bit(n); ++a) {
    for (EventSet b = 0; b < bit(n); ++b) {
      if ((a & b) != 0) continue;
      const auto ab = terminator(u, a | b);
      CHECK(glue(terminator(u, b), terminator(u.without(b), squeeze(a, b, n))) == ab);
      CHECK(glue(terminator(u, a), terminator(u.without(a), squeeze(b, a, n))) == ab);
    }
  }
}

TEST_CASE("unstarting and restarting only adds order") {
  for (const auto& p : corpus()) {
    const auto t = p.target_loset();
    const EventSet mask = events_to_target_positions(p, rfin(p));
    for (EventSet a = mask;; a = (a - 1) & mask) {
      const auto pa = remove_targets(p, target_positions_to_events(p, a));
      CHECK(subsumes(glue(pa, starter(t, a)), p));
      if (a == 0) break;
    }
  }
}

TEST_CASE("removing targets commutes with terminating others") {
  for (const auto& p : corpus()) {
    const auto t = p.target_loset();
    const std::size_t n = t.size();
    const EventSet removable = events_to_target_positions(p, rfin(p));
    for (EventSet a = removable;; a = (a - 1) & removable) {
      for (EventSet b = 0; b < bit(n); ++b) {
        if ((a & b) != 0) continue;
        const auto left = glue(p, terminator(t, b));
        const auto lhs = remove_targets(left, target_positions_to_events(left, squeeze(a, b, n)));
        const auto pa = remove_targets(p, target_positions_to_events(p, a));
        CHECK(lhs == glue(pa, terminator(t.without(a), squeeze(b, a, n))));
      }
      if (a == 0) break;
    }
  }
}

TEST_CASE("removing a source event is refused") {
  CHECK_THROWS_AS(remove_targets(ipo("*a*"), bit(0)), NotRemovable);
  CHECK(remove_targets(ipo("ab*"), bit(1)) == ipo("a"));
}

TEST_CASE("sparse step decomposition") {
  for (const auto& p : corpus()) {
    const auto seq = sparse_decomposition(p);
    CHECK(seq.is_sparse());
    CHECK(compose(seq) == p);
    CHECK(seq.initial_loset == p.source_loset());
  }
  const auto seq = sparse_decomposition(ipo("*ab"));
  REQUIRE(seq.steps.size() == 3);
  CHECK(format(seq.steps[0]) == "(a)↓a");
  CHECK(format(seq.steps[1]) == "(b)↑b");
  CHECK(format(seq.steps[2]) == "(b)↓b");
  CHECK(sparse_decomposition(Ipomset{}).steps.empty());
}

TEST_CASE("signature") {
  const auto p = ipo("[*a*|b*]");
  const auto f = fin(p);
  CHECK(f.kind == StepKind::starter);
  CHECK(f.loset == Loset{{"a", "b"}});
  CHECK(f.active == bit(1));
  CHECK(rfin(p) == target_positions_to_events(p, bit(1)));
}

TEST_CASE("interval representation round trip") {
  for (const auto& p : corpus()) {
    const auto rep = interval_representation(p);
    REQUIRE(rep.intervals.size() == p.size());
    CHECK(from_intervals(rep) == p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        CHECK(p.precedes(x, y) == (rep.intervals[x].end < rep.intervals[y].begin));
      }
    }
  }
  IntervalRep bad;
  bad.labels = {"a"};
  bad.intervals = {Interval{Rational(2), Rational(1)}};
  bad.rank = {0};
  CHECK_THROWS_AS(from_intervals(bad), MalformedInterval);
}

TEST_CASE("rationals") {
  CHECK(Rational::parse_decimal("2.5") == Rational(5, 2));
  CHECK(Rational::parse_decimal("-0.25") == Rational(-1, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(4, 6).to_string() == "2/3");
}
