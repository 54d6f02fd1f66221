#include "hdakit/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "hdakit/errors.hpp"
#include "lexer.hpp"

namespace hdakit {

namespace {

constexpr std::string_view kBullet = "\xE2\x80\xA2";    // •
constexpr std::string_view kParallel = "\xE2\x88\xA5";  // ∥
constexpr std::string_view kEpsilon = "\xCE\xB5";       // ε
constexpr std::string_view kUp = "\xE2\x86\x91";        // ↑
constexpr std::string_view kDown = "\xE2\x86\x93";      // ↓

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

struct Row {
  bool source = false;
  bool target = false;
  std::vector<Label> labels;
};

Row parse_row(std::string_view text) {
  Row row;
  bool trailing_bullet = false;
  std::size_t i = 0;
  auto bullet_at = [&](std::size_t k) -> std::size_t {
    if (text[k] == '*') return 1;
    if (text.substr(k, kBullet.size()) == kBullet) return kBullet.size();
    return 0;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (std::size_t len = bullet_at(i); len > 0) {
      if (trailing_bullet || (row.labels.empty() && row.source)) {
        throw ParseError("doubled interface marker in '" + std::string(text) + "'");
      }
      if (row.labels.empty()) {
        row.source = true;
      } else {
        trailing_bullet = true;
      }
      i += len;
      continue;
    }
    if (trailing_bullet) {
      throw ParseError("interface marker inside a row: '" + std::string(text) + "'");
    }
    if (c == '{') {
      const auto close = text.find('}', i);
      if (close == std::string_view::npos || close == i + 1) {
        throw ParseError("bad braced label in '" + std::string(text) + "'");
      }
      row.labels.emplace_back(text.substr(i + 1, close - i - 1));
      i = close + 1;
      continue;
    }
    if (!is_label_char(c)) {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
    }
    row.labels.emplace_back(1, c);
    ++i;
  }
  if (row.labels.empty()) throw ParseError("empty row in shorthand expression");
  row.target = trailing_bullet;
  return row;
}

std::vector<std::string_view> split_rows(std::string_view body) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i <= body.size()) {
    std::size_t sep = 0;
    if (i == body.size()) {
      sep = 1;
    } else if (body[i] == '|') {
      sep = 1;
    } else if (body.substr(i, kParallel.size()) == kParallel) {
      sep = kParallel.size();
    }
    if (sep > 0) {
      rows.push_back(body.substr(start, i - start));
      i += sep;
      start = i;
    } else {
      ++i;
    }
  }
  return rows;
}

std::optional<std::string> label_token(const Label& l) {
  if (l.size() == 1 && is_label_char(l[0])) return l;
  if (l.empty()) return std::nullopt;
  for (char c : l) {
    if (c == '{' || c == '}' || std::isspace(static_cast<unsigned char>(c)) != 0) return std::nullopt;
  }
  return "{" + l + "}";
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const std::vector<EventSet>& rel) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    EventSet indirect = 0;
    for (std::size_t k : members_of(rel[i])) indirect |= rel[k];
    for (std::size_t j : members_of(rel[i] & ~indirect)) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace

Ipomset parse_shorthand(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty() || body == kEpsilon || body == "eps") return Ipomset{};
  if (body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced '[' in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) return Ipomset{};
  }
  RawIposet raw;
  std::vector<std::vector<std::size_t>> rows;
  for (auto piece : split_rows(body)) {
    const Row row = parse_row(piece);
    std::vector<std::size_t> ids;
    for (std::size_t k = 0; k < row.labels.size(); ++k) {
      const bool src = row.source && k == 0;
      const bool tgt = row.target && k + 1 == row.labels.size();
      ids.push_back(raw.add_event(row.labels[k], src, tgt));
      if (k > 0) raw.prec.emplace_back(ids[k - 1], ids[k]);
    }
    rows.push_back(std::move(ids));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      for (std::size_t x : rows[r]) {
        for (std::size_t y : rows[s]) raw.evord.emplace_back(x, y);
      }
    }
  }
  return canonicalize(raw);
}

std::optional<std::string> to_shorthand(const Ipomset& p, FormatOptions opts) {
  if (p.empty()) return opts.ascii ? std::string("eps") : std::string(kEpsilon);
  const std::size_t n = p.size();

  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : members_of(p.successors(i))) comp[find(i)] = find(j);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  std::vector<std::vector<std::size_t>> rows;
  for (auto& [root, events] : groups) {
    for (std::size_t a : events) {
      for (std::size_t b : events) {
        if (p.concurrent(a, b)) return std::nullopt;
      }
    }
    std::sort(events.begin(), events.end(), [&](std::size_t a, std::size_t b) { return p.precedes(a, b); });
    rows.push_back(events);
  }
  auto row_before = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& s) {
    return p.event_before(r.front(), s.front());
  };
  std::sort(rows.begin(), rows.end(), row_before);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t s = r + 1; s < rows.size(); ++s) {
      for (std::size_t x : rows[r]) {
        for (std::size_t y : rows[s]) {
          if (!p.event_before(x, y)) return std::nullopt;
        }
      }
    }
  }

  const std::string bullet = opts.ascii ? "*" : std::string(kBullet);
  const std::string par = opts.ascii ? "|" : std::string(kParallel);
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += par;
    if (p.is_source(rows[r].front())) out += bullet;
    for (std::size_t e : rows[r]) {
      auto tok = label_token(p.label(e));
      if (!tok) return std::nullopt;
      out += *tok;
    }
    if (p.is_target(rows[r].back())) out += bullet;
  }
  if (rows.size() > 1) out = "[" + out + "]";
  return out;
}

std::string format(const Ipomset& p, FormatOptions opts) {
  if (auto s = to_shorthand(p, opts)) return *s;
  return to_ipo_block(p, "_", false);
}

std::string format(const Loset& u, FormatOptions) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += " ";
    out += u.labels[i];
  }
  return out + "]";
}

std::string format(const StarterTerminator& st, FormatOptions opts) {
  std::string loset;
  for (const auto& l : st.loset.labels) loset += label_token(l).value_or("{" + l + "}");
  bool unique = true;
  for (std::size_t i = 0; i < st.loset.size(); ++i) {
    for (std::size_t j = i + 1; j < st.loset.size(); ++j) {
      if (st.loset.labels[i] == st.loset.labels[j]) unique = false;
    }
  }
  std::string active;
  for (std::size_t k : members_of(st.active)) {
    if (unique) {
      active += label_token(st.loset.labels[k]).value_or("{" + st.loset.labels[k] + "}");
    } else {
      active += "#" + std::to_string(k + 1);
    }
  }
  std::string arrow;
  if (opts.ascii) {
    arrow = st.kind == StepKind::starter ? "^" : "_";
  } else {
    arrow = std::string(st.kind == StepKind::starter ? kUp : kDown);
  }
  return "(" + loset + ")" + arrow + active;
}

std::string format(const std::vector<Ipomset>& set, FormatOptions opts) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ", ";
    out += format(set[i], opts);
  }
  return out + "}";
}

std::string to_ipo_block(const Ipomset& p, std::string_view name, bool multiline) {
  const std::size_t n = p.size();
  auto id = [](std::size_t i) { return "e" + std::to_string(i); };
  std::vector<EventSet> succ(n), ev(n);
  for (std::size_t i = 0; i < n; ++i) {
    succ[i] = p.successors(i);
    ev[i] = p.later_in_event_order(i);
  }

  std::vector<std::pair<std::string, std::string>> sections;
  std::string events;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) events += ", ";
    events += id(i) + ":" + p.label(i);
  }
  sections.emplace_back("events", events);
  auto id_list = [&](EventSet s) {
    std::string out;
    for (std::size_t i : members_of(s)) out += (out.empty() ? "" : ", ") + id(i);
    return out;
  };
  auto pair_list = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::string out;
    for (auto [a, b] : pairs) out += (out.empty() ? "" : ", ") + id(a) + "<" + id(b);
    return out;
  };
  sections.emplace_back("source", id_list(p.sources()));
  sections.emplace_back("target", id_list(p.targets()));
  sections.emplace_back("prec", pair_list(hasse(succ)));
  sections.emplace_back("evord", pair_list(hasse(ev)));

  std::ostringstream os;
  os << "ipomset " << name << " {";
  bool first = true;
  for (const auto& [key, value] : sections) {
    if (value.empty() && key != "events") continue;
    if (multiline) {
      os << "\n  " << key << ": " << value << ";";
    } else {
      os << (first ? " " : "; ") << key << ": " << value;
    }
    first = false;
  }
  os << (multiline ? "\n}" : " }");
  return os.str();
}

NamedIpomset parse_ipo_block(std::string_view text, std::size_t pos, std::size_t* end) {
  using detail::Token;
  detail::Lexer lex(text, pos);
  lex.expect_keyword("ipomset");
  NamedIpomset out;
  out.name = lex.expect_word("ipomset name");
  lex.expect('{');

  RawIposet raw;
  std::map<std::string, std::size_t> ids;
  struct PendingPair {
    std::string a, b;
    Token at;
  };
  std::vector<std::pair<std::string, Token>> sources, targets;
  std::vector<PendingPair> prec, evord;

  while (!lex.peek().is('}')) {
    const Token key = lex.next();
    if (key.kind != Token::Kind::word) detail::Lexer::fail(key, "expected a section name");
    lex.expect(':');
    auto at_end = [&] { return lex.peek().is(';') || lex.peek().is('}'); };
    if (key.text == "events") {
      while (!at_end()) {
        const Token t = lex.next();
        if (t.kind != Token::Kind::word) detail::Lexer::fail(t, "expected an event id");
        lex.expect(':');
        const std::string label = lex.expect_word("a label");
        if (ids.contains(t.text)) detail::Lexer::fail(t, "duplicate event id");
        ids[t.text] = raw.add_event(label);
        lex.accept(',');
      }
    } else if (key.text == "source" || key.text == "target") {
      auto& dst = key.text == "source" ? sources : targets;
      while (!at_end()) {
        const Token t = lex.next();
        if (t.kind != Token::Kind::word) detail::Lexer::fail(t, "expected an event id");
        dst.emplace_back(t.text, t);
        lex.accept(',');
      }
    } else if (key.text == "prec" || key.text == "evord") {
      auto& dst = key.text == "prec" ? prec : evord;
      while (!at_end()) {
        Token prev = lex.next();
        if (prev.kind != Token::Kind::word) detail::Lexer::fail(prev, "expected an event id");
        lex.expect('<');
        do {
          const Token t = lex.next();
          if (t.kind != Token::Kind::word) detail::Lexer::fail(t, "expected an event id");
          dst.push_back({prev.text, t.text, t});
          prev = t;
        } while (lex.accept('<'));
        lex.accept(',');
      }
    } else {
      detail::Lexer::fail(key, "unknown section");
    }
    if (!lex.accept(';')) break;
  }
  lex.expect('}');

  auto resolve = [&](const std::string& name, const Token& at) {
    auto it = ids.find(name);
    if (it == ids.end()) detail::Lexer::fail(at, "unknown event id");
    return it->second;
  };
  for (const auto& [name, at] : sources) raw.source |= bit(resolve(name, at));
  for (const auto& [name, at] : targets) raw.target |= bit(resolve(name, at));
  for (const auto& pp : prec) raw.prec.emplace_back(resolve(pp.a, pp.at), resolve(pp.b, pp.at));
  for (const auto& pp : evord) raw.evord.emplace_back(resolve(pp.a, pp.at), resolve(pp.b, pp.at));
  try {
    out.value = canonicalize(raw);
  } catch (const AxiomViolation& e) {
    throw AxiomViolation("ipomset " + out.name + ": " + e.what());
  }
  if (end != nullptr) *end = lex.offset();
  return out;
}

std::vector<NamedIpomset> parse_ipo(std::string_view text) {
  std::vector<NamedIpomset> out;
  std::size_t pos = 0;
  for (;;) {
    detail::Lexer probe(text, pos);
    if (probe.peek().kind == detail::Token::Kind::end) break;
    out.push_back(parse_ipo_block(text, pos, &pos));
  }
  return out;
}

Ipomset parse_ipomset_text(std::string_view text) {
  detail::Lexer probe(text);
  if (probe.peek().is_word("ipomset")) {
    auto blocks = parse_ipo(text);
    if (blocks.size() != 1) throw ParseError("expected exactly one ipomset block");
    return blocks.front().value;
  }
  return parse_shorthand(text);
}

}  // namespace hdakit
