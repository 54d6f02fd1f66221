#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "hdakit/errors.hpp"
#include "hdakit/io.hpp"
#include "lexer.hpp"

namespace hdakit {

namespace {

using detail::Lexer;
using detail::Token;

struct PendingFace {
  CellId cell;
  FaceKind kind;
  std::size_t pos;
  std::string target;
  Token at;
};

std::size_t parse_position(const Token& t) {
  std::size_t pos = 0;
  for (char c : t.text) {
    if (c < '0' || c > '9' || pos > 1000) Lexer::fail(t, "expected a 1-based position");
    pos = pos * 10 + static_cast<std::size_t>(c - '0');
  }
  if (t.text.empty() || pos == 0) Lexer::fail(t, "expected a 1-based position");
  return pos - 1;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Hda parse_hda(std::string_view text, bool validate_faces) {
  Lexer lex(text);
  lex.expect_keyword("hda");
  Hda x(lex.expect_word("hda name"));
  lex.expect('{');

  std::vector<PendingFace> faces;
  std::vector<std::pair<std::string, Token>> starts, accepts;
  while (!lex.peek().is('}')) {
    const Token key = lex.next();
    if (key.is_word("cell")) {
      const Token id = lex.next();
      if (id.kind != Token::Kind::word) Lexer::fail(id, "expected a cell id");
      lex.expect(':');
      lex.expect('[');
      Loset u;
      while (!lex.peek().is(']')) {
        if (lex.accept(',')) continue;
        u.labels.push_back(lex.expect_word("a label"));
      }
      lex.expect(']');
      if (x.find(id.text)) Lexer::fail(id, "duplicate cell id");
      const CellId c = x.add_cell(id.text, u);
      while (!lex.peek().is(';') && !lex.peek().is('}')) {
        const Token f = lex.next();
        if (!f.is_word("d0") && !f.is_word("d1")) Lexer::fail(f, "expected d0(i)=ID or d1(i)=ID");
        lex.expect('(');
        const Token p = lex.next();
        lex.expect(')');
        lex.expect('=');
        const Token target = lex.next();
        if (target.kind != Token::Kind::word) Lexer::fail(target, "expected a cell id");
        const std::size_t pos = parse_position(p);
        if (pos >= u.size()) Lexer::fail(p, "position exceeds the cell dimension");
        faces.push_back({c, f.text == "d0" ? FaceKind::lower : FaceKind::upper, pos, target.text, target});
        lex.accept(',');
      }
    } else if (key.is_word("start") || key.is_word("accept")) {
      auto& dst = key.text == "start" ? starts : accepts;
      lex.expect(':');
      while (!lex.peek().is(';') && !lex.peek().is('}')) {
        if (lex.accept(',')) continue;
        const Token t = lex.next();
        if (t.kind != Token::Kind::word) Lexer::fail(t, "expected a cell id");
        dst.emplace_back(t.text, t);
      }
    } else {
      Lexer::fail(key, "expected 'cell', 'start' or 'accept'");
    }
    if (!lex.accept(';')) break;
  }
  lex.expect('}');
  if (lex.peek().kind != Token::Kind::end) Lexer::fail(lex.peek(), "trailing input after hda block");

  auto resolve = [&](const std::string& name, const Token& at) {
    auto c = x.find(name);
    if (!c) Lexer::fail(at, "unknown cell id");
    return *c;
  };
  std::map<std::tuple<CellId, FaceKind, std::size_t>, bool> seen;
  for (const auto& f : faces) {
    if (!seen.emplace(std::make_tuple(f.cell, f.kind, f.pos), true).second) {
      Lexer::fail(f.at, "face given twice");
    }
    x.set_face(f.cell, f.kind, f.pos, resolve(f.target, f.at));
  }
  for (const auto& [name, at] : starts) x.add_start(resolve(name, at));
  for (const auto& [name, at] : accepts) x.add_accept(resolve(name, at));
  if (validate_faces) check_valid(x);
  return x;
}

std::string to_hda_text(const Hda& x) {
  std::ostringstream os;
  os << "hda " << (x.name().empty() ? "X" : x.name()) << " {\n";
  for (const auto& cell : x.cells()) {
    os << "  cell " << cell.name << " : [";
    for (std::size_t i = 0; i < cell.dim(); ++i) os << (i > 0 ? " " : "") << cell.loset.labels[i];
    os << "]";
    for (std::size_t i = 0; i < cell.dim(); ++i) {
      if (cell.lower[i] != kNoCell) os << " d0(" << i + 1 << ")=" << x.cell(cell.lower[i]).name;
      if (cell.upper[i] != kNoCell) os << " d1(" << i + 1 << ")=" << x.cell(cell.upper[i]).name;
    }
    os << " ;\n";
  }
  auto list = [&](const std::vector<CellId>& ids) {
    std::string out;
    for (CellId c : ids) out += " " + x.cell(c).name;
    return out;
  };
  os << "  start:" << list(x.start()) << " ;\n";
  os << "  accept:" << list(x.accept()) << " ;\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const Hda& x, const DotOptions& opts) {
  auto bold = [&](CellId c) {
    return std::find(opts.highlight.begin(), opts.highlight.end(), c) != opts.highlight.end();
  };
  auto labels = [&](const Loset& u) {
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) out += (i > 0 ? " " : "") + u.labels[i];
    return out;
  };
  std::ostringstream os;
  os << "digraph " << quote(x.name().empty() ? "X" : x.name()) << " {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (CellId c = 0; c < x.size(); ++c) {
    const auto& cell = x.cell(c);
    if (cell.dim() != 0) continue;
    os << "  " << quote(cell.name) << " [shape=" << (x.is_accept(c) ? "doublecircle" : "circle");
    if (bold(c)) os << ", penwidth=2";
    os << "];\n";
    if (x.is_start(c)) {
      os << "  " << quote("__start_" + cell.name) << " [shape=point, style=invis];\n";
      os << "  " << quote("__start_" + cell.name) << " -> " << quote(cell.name) << ";\n";
    }
  }
  for (CellId c = 0; c < x.size(); ++c) {
    const auto& cell = x.cell(c);
    if (cell.dim() != 1 || cell.lower[0] == kNoCell || cell.upper[0] == kNoCell) continue;
    std::string label = cell.name + ": " + cell.loset.labels[0];
    if (x.is_start(c)) label += " (start)";
    if (x.is_accept(c)) label += " (accept)";
    os << "  " << quote(x.cell(cell.lower[0]).name) << " -> " << quote(x.cell(cell.upper[0]).name)
       << " [label=" << quote(label);
    if (bold(c)) os << ", penwidth=2";
    os << "];\n";
  }
  for (CellId c = 0; c < x.size(); ++c) {
    const auto& cell = x.cell(c);
    if (cell.dim() < 2) continue;
    os << "  // " << cell.name << " [" << labels(cell.loset) << "]:";
    for (std::size_t i = 0; i < cell.dim(); ++i) {
      if (cell.lower[i] != kNoCell) os << " d0(" << i + 1 << ")=" << x.cell(cell.lower[i]).name;
      if (cell.upper[i] != kNoCell) os << " d1(" << i + 1 << ")=" << x.cell(cell.upper[i]).name;
    }
    os << "\n";
    if (cell.dim() != 2) continue;
    std::string label = cell.name + " [" + labels(cell.loset) + "]";
    if (x.is_start(c)) label += " (start)";
    if (x.is_accept(c)) label += " (accept)";
    os << "  subgraph " << quote("cluster_" + cell.name) << " {\n";
    os << "    style=filled; fillcolor=gray90; color=gray60;\n";
    os << "    label=" << quote(label) << ";\n";
    os << "    " << quote(cell.name) << " [shape=box, label=" << quote(cell.name);
    if (bold(c)) os << ", penwidth=2";
    os << "];\n";
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace hdakit
