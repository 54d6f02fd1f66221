#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "hdakit/errors.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/io.hpp"
#include "hdakit/text.hpp"
#include "hdakit_cli/cli.hpp"
#include "hdakit_cli/ingest.hpp"
#include "json.hpp"

using namespace hdakit;

namespace {

const std::string kData = HDAKIT_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& f) { return kData + "/" + f; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hdakit_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"--help"}).code == cli::kTrue);
  CHECK(call({}).code == cli::kError);
  CHECK(call({"hda", "member", data("fig2.hda"), "ab"}).code == cli::kTrue);
  CHECK(call({"hda", "member", data("fig2.hda"), "aa"}).code == cli::kFalse);
  CHECK(call({"ipo", "subsume", "ab", "[a|b]"}).code == cli::kTrue);
  CHECK(call({"ipo", "subsume", "[a|b]", "ab"}).code == cli::kFalse);
  CHECK(call({"lang", "swapinv", data("fig5.lang")}).code == cli::kFalse);
  CHECK(call({"lang", "swapinv", data("det.lang")}).code == cli::kTrue);
  CHECK(call({"mn", "verify", data("fig5.lang")}).code == cli::kTrue);

  const auto bad = call({"ipo", "canon", "[a|"});
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.rfind("error:", 0) == 0);
  CHECK(call({"hda", "validate", data("missing.hda")}).code == cli::kError);
  CHECK(call({"no-such-command"}).code == cli::kError);
  CHECK(call({"ipo", "glue", "a"}).code == cli::kError);
  const auto mismatch = call({"ipo", "glue", "a*", "*b"});
  CHECK(mismatch.code == cli::kError);
  CHECK(mismatch.err.find("interface") != std::string::npos);
  CHECK(call({"hda", "member", data("empty.hda"), "--expr", "a"}).code == cli::kFalse);
}

TEST_CASE("json output") {
  const auto canon = call({"--json", "ipo", "canon", "[a|b*]"});
  REQUIRE(canon.code == cli::kTrue);
  const auto p = nlohmann::json::parse(canon.out);
  CHECK(p["size"] == 2);
  CHECK(p["target"] == nlohmann::json::array({false, true}));
  CHECK(parse_shorthand(p["text"].get<std::string>()) == parse_shorthand("[a|b*]"));

  const auto eq = call({"--json", "lang", "equiv", data("strongeq.lang"), "aa*", "ba*"});
  CHECK(eq.code == cli::kFalse);
  const auto e = nlohmann::json::parse(eq.out);
  CHECK(e["weak"] == true);
  CHECK(e["strong"] == false);

  const auto member = nlohmann::json::parse(call({"--json", "hda", "member", data("fig2.hda"), "[a|b]"}).out);
  CHECK(member["member"] == true);
  CHECK(member["witness"]["start"] == "v");
  CHECK(member["witness"]["end"] == "y");

  const auto verify = nlohmann::json::parse(call({"--json", "mn", "verify", data("aa.lang")}).out);
  CHECK(verify["ok"] == true);

  const auto ascii = call({"--ascii", "ipo", "canon", "[a|b*]"});
  CHECK(ascii.out.find("[a|b*]") != std::string::npos);
}

TEST_CASE("event logs") {
  const auto records = cli::parse_log_csv(read_file(data("fig4_log.csv")));
  REQUIRE(records.size() == 4);
  CHECK(records[2].open_left);
  CHECK(records[3].open_right);
  CHECK(records[1].begin == Rational(11, 5));

  const auto expected = parse_ipo(read_file(data("fig4.ipo"))).front().value;
  CHECK(cli::ingest_log(records, cli::TieBreak::input) == expected);

  const auto out = call({"ingest", data("fig4_log.csv"), "--tie-break", "input"});
  REQUIRE(out.code == cli::kTrue);
  CHECK(parse_ipomset_text(out.out) == expected);

  CHECK_THROWS_AS(cli::ingest_log(cli::parse_log_csv("x,a,3,1,false,false\n")), MalformedInterval);
  CHECK_THROWS_AS(cli::parse_log_csv("x,a,1.2.3,4,false,false\n"), MalformedInterval);
  CHECK(cli::ingest_log(cli::parse_log_csv("x,a,1,2,false,false\n")) == parse_shorthand("a"));
  CHECK(cli::ingest_log(cli::parse_log_csv("x,a,1,2,0,0\ny,b,3,4,0,0\n")) == parse_shorthand("ab"));
  CHECK_THROWS_AS(cli::parse_log_csv("x,a,1\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_log_csv("x,a,1,2,maybe,false\n"), ParseError);
  // the same two events in every order give the same ipomset
  const auto ab = cli::parse_log_csv("p,a,0,2,false,false\nq,b,1,3,false,false\n");
  const auto ba = cli::parse_log_csv("q,b,1,3,false,false\np,a,0,2,false,false\n");
  CHECK(cli::ingest_log(ab) == cli::ingest_log(ba));
  CHECK(cli::ingest_log(ab, cli::TieBreak::input) != cli::ingest_log(ba, cli::TieBreak::input));
}

TEST_CASE("written files") {
  const auto hda_path = scratch("fig5.hda");
  const auto dot_path = scratch("fig5.dot");
  const auto classes_path = scratch("fig5.json");
  REQUIRE(call({"mn", "build", data("fig5.lang"), "-o", hda_path.string(), "--dot", dot_path.string(), "--classes",
                classes_path.string()})
              .code == cli::kTrue);
  const auto x = parse_hda(read_file(hda_path.string()));
  CHECK(validate(x).ok());
  CHECK(call({"hda", "member", hda_path.string(), "abc"}).code == cli::kTrue);
  CHECK(call({"hda", "member", hda_path.string(), "--expr", "ac"}).code == cli::kFalse);
  CHECK(read_file(dot_path.string()).find("cluster_") != std::string::npos);
  CHECK(nlohmann::json::parse(read_file(classes_path.string())).is_array());
  const auto det = call({"hda", "det", hda_path.string()});
  CHECK(det.code == cli::kFalse);
  CHECK_FALSE(det.out.empty());
}

TEST_CASE("step bound from the environment") {
  const auto unbounded = call({"hda", "lang", data("loop.hda")});
  ::setenv("HDAKIT_MAX_STEPS", "2", 1);
  const auto small = call({"hda", "lang", data("loop.hda")});
  ::unsetenv("HDAKIT_MAX_STEPS");
  REQUIRE(small.code == cli::kTrue);
  CHECK(small.out.size() < unbounded.out.size());
  CHECK(call({"hda", "lang", data("loop.hda"), "--max-steps", "2"}).out == small.out);
}
