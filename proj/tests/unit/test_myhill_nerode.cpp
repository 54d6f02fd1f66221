#include <algorithm>
#include <map>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "hdakit/io.hpp"
#include "hdakit/json_io.hpp"
#include "hdakit/myhill_nerode.hpp"
#include "hdakit/text.hpp"
#include "oracles.hpp"

using namespace hdakit;
using namespace hdakit::testing;

namespace {

const std::string kData = HDAKIT_DATA_DIR;

Ipomset ipo(const char* s) { return parse_shorthand(s); }

LanguageSet load(const std::string& f) { return parse_lang(read_file(kData + "/" + f)); }

// Classes of prefixes with no target events are plain quotient classes.
std::size_t oracle_point_classes(const LanguageSet& l) {
  std::map<Ipomset, std::set<Ipomset>> quotients;
  for (const auto& m : l.members()) {
    for (const auto& [left, right] : oracle_divisions(m)) quotients[left].insert(right);
  }
  std::set<std::set<Ipomset>> distinct;
  for (const auto& [p, q] : quotients) {
    if (p.target_loset().size() == 0) distinct.insert(q);
  }
  return distinct.size();
}

}  // namespace

TEST_CASE("essential profiles of the example languages") {
  CHECK(build_mn(load("fig5.lang")).essential_profile() == std::vector<std::size_t>{5, 6, 1});
  CHECK(build_mn(load("strongeq.lang")).essential_profile() == std::vector<std::size_t>{4, 5, 1});
  CHECK(build_mn(load("aa.lang")).essential_profile() == std::vector<std::size_t>{0, 1, 2});
  CHECK(build_mn(load("det.lang")).essential_profile() == std::vector<std::size_t>{3, 3, 1});
  for (const char* f : {"fig5.lang", "strongeq.lang", "det.lang"}) {
    CHECK(build_mn(load(f)).essential_profile().front() == oracle_point_classes(load(f)));
  }
}

TEST_CASE("cells of the running example") {
  const auto l = load("fig5.lang");
  const auto m = build_mn(l);
  const auto start = m.cell_of(Ipomset{}, l);
  REQUIRE(start.has_value());
  CHECK(m.hda.is_start(*start));
  CHECK(std::count_if(m.hda.start().begin(), m.hda.start().end(),
                      [&](CellId c) { return m.cells[c].essential; }) == 1);
  // ba and [a|b] end in the same class, ab and [a|b] do not
  CHECK(m.cell_of(ipo("ba"), l) == m.cell_of(ipo("[a|b]"), l));
  CHECK(m.cell_of(ipo("ab"), l) != m.cell_of(ipo("[a|b]"), l));
  CHECK(m.cell_of(ipo("ab*"), l) != m.cell_of(ipo("[a|b*]"), l));
  CHECK(m.cell_of(ipo("ab*"), l).has_value());
  const auto acc = m.cell_of(ipo("abc"), l);
  REQUIRE(acc.has_value());
  CHECK(m.hda.is_accept(*acc));
  CHECK_FALSE(m.hda.is_accept(*m.cell_of(ipo("a"), l)));
}

TEST_CASE("strongly but not weakly separated prefixes get distinct cells") {
  const auto l = load("strongeq.lang");
  const auto m = build_mn(l);
  CHECK(classify(ipo("aa*"), l).quotient() == classify(ipo("ba*"), l).quotient());
  CHECK(classify(ipo("aa*"), l) != classify(ipo("ba*"), l));
  CHECK(m.cell_of(ipo("aa*"), l) != m.cell_of(ipo("ba*"), l));
}

TEST_CASE("subsidiary cells fill in missing faces") {
  const auto l = load("aa.lang");
  const auto m = build_mn(l);
  CHECK(m.subsidiary.contains(Loset{}));
  for (const auto& [u, c] : m.subsidiary) {
    CHECK(m.cells[c].kind == MnCell::Kind::subsidiary);
    CHECK_FALSE(m.cells[c].essential);
    CHECK_FALSE(m.hda.is_start(c));
    CHECK_FALSE(m.hda.is_accept(c));
    CHECK(m.hda.cell(c).name.rfind("w_", 0) == 0);
  }
  CHECK(validate(m.hda).ok());
}

TEST_CASE("the construction agrees with the language on a random corpus") {
  for (const auto& l : language_corpus(kCorpusSeed + 11, 30)) {
    const auto m = build_mn(l);
    const auto r = verify_mn(l, m);
    CHECK(r.ok());
    CHECK(r.missing.empty());
    CHECK(r.extra.empty());
    for (const auto& p : l.prefixes()) {
      const auto c = m.cell_of(p, l);
      REQUIRE(c.has_value());
      CHECK(m.cells[*c].essential);
      CHECK(m.hda.is_accept(*c) == l.contains(p));
    }
    CHECK(m.essential_profile().front() == oracle_point_classes(l));
  }
}

TEST_CASE("the automaton does not depend on the exploration order") {
  for (const auto& l : language_corpus(kCorpusSeed + 13, 15)) {
    const auto base = canonical_signature(build_mn(l));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto shuffled = build_mn(l, MnOptions{seed});
      CHECK(canonical_signature(shuffled) == base);
      CHECK(verify_mn(l, shuffled).ok());
    }
  }
}

TEST_CASE("class table") {
  const auto m = build_mn(load("fig5.lang"));
  const auto t = class_table(m);
  REQUIRE(t.is_array());
  CHECK(t.size() == m.cells.size());
  std::size_t essential = 0;
  for (const auto& row : t) {
    CHECK(row.contains("id"));
    CHECK(row.contains("loset"));
    CHECK(row["quotient"].is_array());
    if (row["essential"].get<bool>()) {
      ++essential;
      CHECK_FALSE(row["quotient"].empty());
      CHECK(row["representative"].is_string());
    }
  }
  CHECK(essential == 12);
}
