#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "hdakit/errors.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/io.hpp"
#include "hdakit/myhill_nerode.hpp"
#include "hdakit/refine.hpp"
#include "hdakit/steps.hpp"
#include "hdakit/text.hpp"

using namespace hdakit;

namespace {

const std::string kData = HDAKIT_DATA_DIR;

Ipomset ipo(const char* s) { return parse_shorthand(s); }

Hda load(const std::string& f) { return parse_hda(read_file(kData + "/" + f)); }

CellId id(const Hda& x, const std::string& name) {
  auto c = x.find(name);
  REQUIRE(c.has_value());
  return *c;
}

const char* kSquare = R"(
hda sq {
  cell v : [] ; cell w : [] ; cell x : [] ; cell y : [] ;
  cell e : [a] d0(1)=v d1(1)=w ;
  cell f : [a] d0(1)=x d1(1)=y ;
  cell g : [b] d0(1)=v d1(1)=x ;
  cell h : [b] d0(1)=%H0% d1(1)=y ;
  cell q : [a b] d0(1)=%Q0% d1(1)=h d0(2)=e d1(2)=f ;
  start: v ; accept: y ;
}
)";

std::string square(const std::string& h0, const std::string& q0) {
  std::string s = kSquare;
  s.replace(s.find("%H0%"), 4, h0);
  s.replace(s.find("%Q0%"), 4, q0);
  return s;
}

}  // namespace

TEST_CASE("hda files") {
  const auto x = load("fig2.hda");
  CHECK(x.name() == "fig2");
  CHECK(x.size() == 9);
  CHECK(x.count_of_dim(0) == 4);
  CHECK(x.count_of_dim(1) == 4);
  CHECK(x.count_of_dim(2) == 1);
  CHECK(x.cells_of(Loset{{"a"}}).size() == 2);
  CHECK(validate(x).ok());
  const auto again = parse_hda(to_hda_text(x));
  CHECK(again.size() == x.size());
  CHECK(to_hda_text(again) == to_hda_text(x));
  CHECK(load("empty.hda").size() == 0);
  CHECK_THROWS_AS(parse_hda("hda h { cell v : [] ; start: u ; }"), ParseError);
  CHECK_THROWS_AS(parse_hda("hda h { cell v : [] ; cell v : [] ; }"), ParseError);
}

TEST_CASE("validation finds broken faces") {
  CHECK(validate(parse_hda(square("w", "g"))).ok());

  const auto identity_broken = parse_hda(square("v", "g"), false);
  const auto r = validate(identity_broken);
  CHECK_FALSE(r.ok());
  CHECK(std::any_of(r.issues.begin(), r.issues.end(),
                    [](const ValidationIssue& i) { return i.kind == ValidationIssue::Kind::identity; }));
  CHECK_THROWS_AS(parse_hda(square("v", "g")), IdentityViolation);

  const auto typing_broken = parse_hda(square("w", "e"), false);
  const auto typing = validate(typing_broken);
  CHECK(std::any_of(typing.issues.begin(), typing.issues.end(),
                    [](const ValidationIssue& i) { return i.kind == ValidationIssue::Kind::face_typing; }));
  CHECK_THROWS_AS(parse_hda(square("w", "e")), FaceTypingError);
  CHECK_THROWS_AS(check_valid(typing_broken), FaceTypingError);

  Hda missing;
  const auto v = missing.add_cell("v", {});
  const auto e = missing.add_cell("e", Loset{{"a"}});
  missing.set_face(e, FaceKind::lower, 0, v);
  CHECK(validate(missing).issues.front().kind == ValidationIssue::Kind::missing_face);
}

TEST_CASE("composite faces") {
  const auto x = load("fig2.hda");
  const auto q = id(x, "q");
  CHECK(composite_face(x, q, FaceKind::lower, bit(0) | bit(1)) == id(x, "v"));
  CHECK(composite_face(x, q, FaceKind::upper, bit(0) | bit(1)) == id(x, "y"));
  CHECK(composite_face(x, q, FaceKind::lower, bit(0)) == id(x, "g"));
  CHECK(composite_face(x, q, FaceKind::upper, bit(1)) == id(x, "f"));
  CHECK(composite_face(x, q, FaceKind::lower, 0) == q);
  CHECK(x.cofaces(id(x, "e"), FaceKind::lower).size() == 1);
  CHECK(x.cofaces(id(x, "e"), FaceKind::lower).front().pos == 1);
}

TEST_CASE("paths and their event ipomsets") {
  const auto x = load("fig2.hda");
  const auto v = id(x, "v");
  const auto e = id(x, "e");
  const auto q = id(x, "q");
  const auto y = id(x, "y");
  const Path lazy{v, {{true, bit(0), e}, {true, bit(1), q}, {false, bit(0) | bit(1), y}}};
  CHECK(is_valid_path(x, lazy));
  CHECK(is_accepting(x, lazy));
  CHECK_FALSE(is_sparse(lazy));
  CHECK(ev_of_path(x, lazy) == ipo("[a|b]"));

  const auto sparse = sparse_normalize(x, lazy);
  CHECK(is_sparse(sparse));
  CHECK(is_valid_path(x, sparse));
  CHECK(sparse.steps.size() == 2);
  CHECK(ev_of_path(x, sparse) == ev_of_path(x, lazy));
  CHECK(format_path(x, sparse) == "v ↗ab q ↘ab y");
  CHECK(format_path(x, sparse, true) == "v +ab q -ab y");

  const Path wrong{v, {{true, bit(0), q}}};
  CHECK_FALSE(is_valid_path(x, wrong));
}

TEST_CASE("sparse normalisation keeps the event ipomset") {
  const auto x = load("loop.hda");
  for (const auto& p : enumerate_sparse_paths(x, 6)) {
    CHECK(is_sparse(p));
    CHECK(sparse_normalize(x, p) == p);
    // split every step into single events
    Path slow{p.start, {}};
    CellId cur = p.start;
    for (const auto& st : p.steps) {
      const CellId higher = st.up ? st.cell : cur;
      EventSet done = 0;
      for (std::size_t k : members_of(st.positions)) {
        done |= bit(k);
        if (st.up) {
          // cell with the events in `done` started
          slow.steps.push_back({true, 0, composite_face(x, higher, FaceKind::lower, st.positions & ~done)});
        } else {
          slow.steps.push_back({false, 0, composite_face(x, higher, FaceKind::upper, done)});
        }
      }
      cur = st.cell;
    }
    // fill in positions relative to the higher cell of each single step
    CellId at = slow.start;
    for (auto& st : slow.steps) {
      const CellId higher = st.up ? st.cell : at;
      const CellId lower = st.up ? at : st.cell;
      for (std::size_t i = 0; i < x.cell(higher).dim(); ++i) {
        if (x.face(higher, st.up ? FaceKind::lower : FaceKind::upper, i) == lower) {
          st.positions = bit(i);
          break;
        }
      }
      at = st.cell;
    }
    REQUIRE(is_valid_path(x, slow));
    CHECK(ev_of_path(x, slow) == ev_of_path(x, p));
    CHECK(sparse_normalize(x, slow) == p);
  }
}

TEST_CASE("essential cells") {
  auto x = parse_hda(R"(
hda ess {
  cell s : [] ; cell t : [] ; cell dead : [] ; cell lost : [] ;
  cell e : [a] d0(1)=s d1(1)=t ;
  cell d : [b] d0(1)=s d1(1)=dead ;
  cell l : [c] d0(1)=lost d1(1)=t ;
  start: s ; accept: t ;
})");
  const auto r = essential_report(x);
  auto names = [&](const std::vector<CellId>& ids) {
    std::set<std::string> out;
    for (CellId c : ids) out.insert(x.cell(c).name);
    return out;
  };
  CHECK(names(r.accessible) == std::set<std::string>{"s", "t", "e", "d", "dead"});
  CHECK(names(r.coaccessible) == std::set<std::string>{"s", "t", "e", "l", "lost"});
  CHECK(names(r.essential) == std::set<std::string>{"s", "t", "e"});
  CHECK(ess_closure(x).size() == 3);
  CHECK(enumerate_language(ess_closure(x), 4) == enumerate_language(x, 4));
}

TEST_CASE("membership") {
  const auto x = load("fig2.hda");
  for (const char* p : {"ab", "ba", "[a|b]", "ab*", "[a|b*]"}) {
    const auto w = member(x, ipo(p));
    REQUIRE(w.has_value());
    CHECK(is_valid_path(x, *w));
    CHECK(is_accepting(x, *w));
    CHECK(ev_of_path(x, *w) == ipo(p));
  }
  for (const char* p : {"a", "b*", "aa", "ba*", "[a*|b*]", "abc"}) CHECK_FALSE(member(x, ipo(p)).has_value());
  CHECK_FALSE(member(load("empty.hda"), Ipomset{}).has_value());
}

TEST_CASE("the loop accepts every power of the square") {
  const auto x = load("loop.hda");
  const auto sq = ipo("[*aa*|b]");
  CHECK(member(x, ipo("*a*")).has_value());
  auto power = sq;
  for (int n = 1; n <= 3; ++n) {
    CHECK(member(x, power).has_value());
    for (const auto& r : refinements(power)) CHECK(member(x, r).has_value());
    power = glue(power, sq);
  }
  CHECK_FALSE(member(x, ipo("*aa*")).has_value());
  CHECK_FALSE(member(x, ipo("*aaa*")).has_value());
  CHECK_FALSE(member(x, ipo("[*a*|b]")).has_value());
}

TEST_CASE("language enumeration agrees with path enumeration and membership") {
  const auto corpus = testing::language_corpus(testing::kCorpusSeed + 3, 20);
  for (const auto& l : corpus) {
    const auto m = build_mn(l);
    const auto lang = enumerate_language(m.hda, 8);
    std::set<Ipomset> from_paths;
    for (const auto& p : enumerate_sparse_paths(m.hda, 8)) {
      CHECK(is_accepting(m.hda, p));
      from_paths.insert(ev_of_path(m.hda, p));
    }
    CHECK(std::set<Ipomset>(lang.begin(), lang.end()) == from_paths);
    for (const auto& p : lang) CHECK(member(m.hda, p).has_value());
  }
  for (const char* f : {"fig2.hda", "loop.hda"}) {
    const auto x = load(f);
    const auto lang = enumerate_language(x, 6);
    std::set<Ipomset> from_paths;
    for (const auto& p : enumerate_sparse_paths(x, 6)) from_paths.insert(ev_of_path(x, p));
    CHECK(std::set<Ipomset>(lang.begin(), lang.end()) == from_paths);
  }
}

TEST_CASE("determinism") {
  const auto fig2 = load("fig2.hda");
  CHECK(is_deterministic(fig2).deterministic);

  auto two_starts = fig2;
  two_starts.add_start(id(fig2, "w"));
  const auto v = is_deterministic(two_starts);
  CHECK_FALSE(v.deterministic);
  CHECK(v.start_witness.has_value());

  const auto det = build_mn(parse_lang(read_file(kData + "/det.lang")));
  CHECK(is_deterministic(det.hda).deterministic);

  const auto nondet = is_deterministic(build_mn(parse_lang(read_file(kData + "/fig5.lang"))).hda);
  CHECK_FALSE(nondet.deterministic);
  CHECK(nondet.branch_witness.has_value());
}

TEST_CASE("dot output") {
  const auto x = load("fig2.hda");
  const auto dot = to_dot(x, DotOptions{essential_report(x).essential});
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("cluster_q") != std::string::npos);
  CHECK(dot.find("\"v\"") != std::string::npos);
}
