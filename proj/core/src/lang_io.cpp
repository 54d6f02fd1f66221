#include <cctype>
#include <sstream>

#include "hdakit/errors.hpp"
#include "hdakit/io.hpp"
#include "hdakit/text.hpp"
#include "lexer.hpp"

namespace hdakit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::size_t line_end(std::string_view text, std::size_t pos) {
  const auto nl = text.find('\n', pos);
  return nl == std::string_view::npos ? text.size() : nl;
}

}  // namespace

LanguageSet parse_lang(std::string_view text) {
  std::set<Label> alphabet;
  bool closed = false;
  bool in_members = false;
  std::vector<Ipomset> members;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = line_end(text, pos);
    ++line_no;
    const std::string_view line = trim(strip_comment(text.substr(pos, end - pos)));
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError(std::to_string(line_no) + ": " + msg);
    };
    if (line.empty()) {
      pos = end + 1;
      continue;
    }
    if (in_members) {
      if (line.starts_with("ipomset")) {
        std::size_t after = 0;
        members.push_back(parse_ipo_block(text, pos, &after).value);
        for (std::size_t i = pos; i < after; ++i) {
          if (text[i] == '\n') ++line_no;
        }
        pos = line_end(text, after) + 1;
        continue;
      }
      try {
        members.push_back(parse_shorthand(line));
      } catch (const ParseError& e) {
        fail(e.what());
      }
      pos = end + 1;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'key: value'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));
    if (key == "alphabet") {
      std::istringstream is{std::string(value)};
      for (std::string a; is >> a;) alphabet.insert(a);
    } else if (key == "closed") {
      if (value == "true") {
        closed = true;
      } else if (value == "false") {
        closed = false;
      } else {
        fail("closed must be true or false");
      }
    } else if (key == "members") {
      in_members = true;
      if (!value.empty()) fail("members start on the next line");
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
    pos = end + 1;
  }
  return closed ? LanguageSet::from_closed(std::move(members), std::move(alphabet))
                : LanguageSet::from_generators(std::move(members), std::move(alphabet));
}

std::string to_lang_text(const LanguageSet& l) {
  std::ostringstream os;
  os << "alphabet:";
  for (const auto& a : l.alphabet()) os << " " << a;
  os << "\nclosed: true\nmembers:\n";
  std::size_t k = 0;
  for (const auto& m : l.members()) {
    if (auto s = to_shorthand(m)) {
      os << "  " << *s << "\n";
    } else {
      os << to_ipo_block(m, "m" + std::to_string(k), true) << "\n";
    }
    ++k;
  }
  return os.str();
}

}  // namespace hdakit
