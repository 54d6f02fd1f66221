#include "hdakit_cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hdakit/errors.hpp"
#include "hdakit/hda.hpp"
#include "hdakit/io.hpp"
#include "hdakit/json_io.hpp"
#include "hdakit/language.hpp"
#include "hdakit/myhill_nerode.hpp"
#include "hdakit/refine.hpp"
#include "hdakit/steps.hpp"
#include "hdakit/text.hpp"
#include "hdakit_cli/ingest.hpp"

namespace hdakit::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMaxSteps = 8;

std::size_t default_max_steps() {
  if (const char* env = std::getenv("HDAKIT_MAX_STEPS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error("HDAKIT_MAX_STEPS is not a number: '" + std::string(env) + "'");
    }
  }
  return kDefaultMaxSteps;
}

struct Context {
  std::ostream& out;
  bool as_json = false;
  bool ascii = false;
  std::string alphabet_text;

  FormatOptions fmt() const { return {ascii}; }
  std::string show(const Ipomset& p) const { return format(p, fmt()); }
  std::string show(const std::vector<Ipomset>& s) const { return format(s, fmt()); }

  std::set<Label> alphabet() const {
    std::set<Label> out;
    std::string word;
    for (char c : alphabet_text + " ") {
      if (c == ' ' || c == ',') {
        if (!word.empty()) out.insert(word);
        word.clear();
      } else {
        word += c;
      }
    }
    return out;
  }

  void check_alphabet(const Ipomset& p) const {
    const auto sigma = alphabet();
    if (sigma.empty()) return;
    for (const auto& l : p.labels()) {
      if (!sigma.contains(l)) throw Error("label '" + l + "' is not in the alphabet");
    }
  }

  Ipomset ipomset(const std::string& arg) const {
    Ipomset p;
    if (std::filesystem::is_regular_file(arg)) {
      p = parse_ipomset_file(read_file(arg));
    } else {
      p = parse_ipomset_text(arg);
    }
    check_alphabet(p);
    return p;
  }

  static Ipomset parse_ipomset_file(const std::string& text) {
    auto blocks = parse_ipo(text);
    if (!blocks.empty()) return blocks.front().value;
    return parse_shorthand(text);
  }

  Hda hda(const std::string& path, bool validate_faces = true) const {
    return parse_hda(read_file(path), validate_faces);
  }

  LanguageSet language(const std::string& path) const {
    LanguageSet l = parse_lang(read_file(path));
    const auto sigma = alphabet();
    if (!sigma.empty()) l = LanguageSet::from_closed(l.members(), sigma);
    return l;
  }

  void print(const json& j) const { out << j.dump(2) << "\n"; }
};

std::string bijection_text(const std::vector<std::size_t>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += (i > 0 ? ", " : "") + std::string("e") + std::to_string(i) + "->e" + std::to_string(f[i]);
  }
  return s;
}

std::string cell_names(const Hda& x, const std::vector<CellId>& ids) {
  std::string s;
  for (CellId c : ids) s += (s.empty() ? "" : " ") + x.cell(c).name;
  return s;
}

json names_json(const Hda& x, const std::vector<CellId>& ids) {
  json a = json::array();
  for (CellId c : ids) a.push_back(x.cell(c).name);
  return a;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

struct Command {
  CLI::App* app;
  std::function<int()> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, false, false, {}};
  CLI::App app{"Higher-dimensional automata and ipomset languages"};
  app.name("hdakit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", ctx.as_json, "Machine-readable output");
  app.add_flag("--ascii", ctx.ascii, "Print * and | instead of bullets and parallel bars");
  app.add_option("--alphabet", ctx.alphabet_text, "Override the alphabet, e.g. \"a b c\"");

  std::vector<Command> commands;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  // ipo -------------------------------------------------------------------
  auto* ipo = app.add_subcommand("ipo", "Ipomset algebra");
  ipo->require_subcommand(1);
  ipo->fallthrough();
  std::string p_arg, q_arg;

  auto* canon = leaf(ipo, "canon", "Print the canonical form");
  canon->add_option("P", p_arg, "file or expression")->required();
  commands.push_back({canon, [&] {
    const auto p = ctx.ipomset(p_arg);
    if (ctx.as_json) {
      ctx.print(to_json(p));
    } else {
      out << to_ipo_block(p, "P") << "\n";
      if (auto s = to_shorthand(p, ctx.fmt())) out << "shorthand: " << *s << "\n";
    }
    return kTrue;
  }});

  auto* glue_cmd = leaf(ipo, "glue", "Gluing composition P * Q");
  glue_cmd->add_option("P", p_arg)->required();
  glue_cmd->add_option("Q", q_arg)->required();
  commands.push_back({glue_cmd, [&] {
    const auto r = glue(ctx.ipomset(p_arg), ctx.ipomset(q_arg));
    if (ctx.as_json) {
      ctx.print(to_json(r));
    } else {
      out << ctx.show(r) << "\n" << to_ipo_block(r, "PQ") << "\n";
    }
    return kTrue;
  }});

  auto* subsume_cmd = leaf(ipo, "subsume", "Decide P ⊑ Q");
  subsume_cmd->add_option("P", p_arg)->required();
  subsume_cmd->add_option("Q", q_arg)->required();
  commands.push_back({subsume_cmd, [&] {
    const auto p = ctx.ipomset(p_arg);
    const auto q = ctx.ipomset(q_arg);
    const auto f = find_subsumption(p, q);
    if (ctx.as_json) {
      ctx.print(json{{"subsumes", f.has_value()}, {"mapping", f ? json(*f) : json(nullptr)}});
    } else if (f) {
      out << ctx.show(p) << " is subsumed by " << ctx.show(q) << "\nmapping: " << bijection_text(*f) << "\n";
    } else {
      out << ctx.show(p) << " is not subsumed by " << ctx.show(q) << "\n";
    }
    return f ? kTrue : kFalse;
  }});

  auto* decompose = leaf(ipo, "decompose", "Sparse step decomposition");
  decompose->add_option("P", p_arg)->required();
  commands.push_back({decompose, [&] {
    const auto seq = sparse_decomposition(ctx.ipomset(p_arg));
    if (ctx.as_json) {
      ctx.print(to_json(seq));
    } else {
      out << "initial: " << format(seq.initial_loset, ctx.fmt()) << "\n";
      for (std::size_t k = 0; k < seq.steps.size(); ++k) {
        out << k + 1 << ": " << format(seq.steps[k], ctx.fmt()) << "\n";
      }
    }
    return kTrue;
  }});

  auto* refine = leaf(ipo, "refine", "All refinements (downward subsumption closure)");
  refine->add_option("P", p_arg)->required();
  commands.push_back({refine, [&] {
    const auto rs = refinements(ctx.ipomset(p_arg));
    if (ctx.as_json) {
      ctx.print(to_json(rs));
    } else {
      out << rs.size() << " refinements\n";
      for (const auto& r : rs) out << "  " << ctx.show(r) << "\n";
    }
    return kTrue;
  }});

  auto* divide = leaf(ipo, "divide", "All ways of writing P as a gluing");
  divide->add_option("P", p_arg)->required();
  commands.push_back({divide, [&] {
    const auto ds = enumerate_divisions(ctx.ipomset(p_arg));
    if (ctx.as_json) {
      json a = json::array();
      for (const auto& d : ds) a.push_back({{"left", to_json(d.left)}, {"right", to_json(d.right)}});
      ctx.print(a);
    } else {
      out << ds.size() << " divisions\n";
      for (const auto& d : ds) out << "  " << ctx.show(d.left) << " * " << ctx.show(d.right) << "\n";
    }
    return kTrue;
  }});

  // hda -------------------------------------------------------------------
  auto* hda = app.add_subcommand("hda", "Higher-dimensional automata");
  hda->require_subcommand(1);
  hda->fallthrough();
  std::string x_arg;
  std::size_t max_steps = 0;
  bool show_paths = false;
  std::string expr;
  bool want_closure = false;
  std::string out_path;

  auto* validate_cmd = leaf(hda, "validate", "Check face typing and the precubical identities");
  validate_cmd->add_option("X", x_arg)->required();
  commands.push_back({validate_cmd, [&] {
    const auto x = ctx.hda(x_arg, false);
    const auto r = validate(x);
    if (ctx.as_json) {
      json issues = json::array();
      for (const auto& i : r.issues) issues.push_back(i.message);
      ctx.print(json{{"valid", r.ok()}, {"issues", issues}});
    } else if (r.ok()) {
      out << "valid: " << x.size() << " cells\n";
    } else {
      for (const auto& i : r.issues) out << i.message << "\n";
    }
    return r.ok() ? kTrue : kFalse;
  }});

  auto* lang_of = leaf(hda, "lang", "Language up to a number of sparse steps");
  lang_of->add_option("X", x_arg)->required();
  lang_of->add_option("--max-steps", max_steps, "Bound on sparse steps (default $HDAKIT_MAX_STEPS or 8)");
  lang_of->add_flag("--paths", show_paths, "Also list the sparse accepting paths");
  commands.push_back({lang_of, [&] {
    const auto x = ctx.hda(x_arg);
    const std::size_t bound = max_steps > 0 ? max_steps : default_max_steps();
    const auto lang = enumerate_language(x, bound);
    const auto paths = show_paths ? enumerate_sparse_paths(x, bound) : std::vector<Path>{};
    if (ctx.as_json) {
      json j{{"max_steps", bound}, {"language", to_json(lang)}};
      if (show_paths) {
        json a = json::array();
        for (const auto& p : paths) a.push_back(path_to_json(x, p));
        j["paths"] = a;
      }
      ctx.print(j);
    } else {
      out << lang.size() << " ipomsets within " << bound << " sparse steps\n";
      for (const auto& p : lang) out << "  " << ctx.show(p) << "\n";
      if (show_paths) {
        out << paths.size() << " sparse accepting paths\n";
        for (const auto& p : paths) out << "  " << format_path(x, p, ctx.ascii) << "\n";
      }
    }
    return kTrue;
  }});

  auto* member_cmd = leaf(hda, "member", "Is P accepted?");
  member_cmd->add_option("X", x_arg)->required();
  member_cmd->add_option("P", p_arg, "file or expression");
  member_cmd->add_option("--expr", expr, "ipomset expression");
  commands.push_back({member_cmd, [&] {
    if (p_arg.empty() == expr.empty()) throw Error("give exactly one of P or --expr");
    const auto x = ctx.hda(x_arg);
    const auto p = ctx.ipomset(expr.empty() ? p_arg : expr);
    const auto w = member(x, p);
    if (ctx.as_json) {
      ctx.print(json{{"member", w.has_value()}, {"witness", w ? path_to_json(x, *w) : json(nullptr)}});
    } else if (w) {
      out << "accepted: " << format_path(x, *w, ctx.ascii) << "\n";
    } else {
      out << "rejected\n";
    }
    return w ? kTrue : kFalse;
  }});

  auto* ess = leaf(hda, "ess", "Accessible, coaccessible and essential cells");
  ess->add_option("X", x_arg)->required();
  ess->add_flag("--closure", want_closure, "Print the essential sub-HDA instead");
  commands.push_back({ess, [&] {
    const auto x = ctx.hda(x_arg);
    if (want_closure) {
      const auto sub = ess_closure(x);
      if (ctx.as_json) {
        ctx.print(to_json(sub));
      } else {
        out << to_hda_text(sub);
      }
      return kTrue;
    }
    const auto r = essential_report(x);
    if (ctx.as_json) {
      ctx.print(json{{"accessible", names_json(x, r.accessible)},
                     {"coaccessible", names_json(x, r.coaccessible)},
                     {"essential", names_json(x, r.essential)},
                     {"closure", names_json(x, r.closure)}});
    } else {
      out << "accessible: " << cell_names(x, r.accessible) << "\n";
      out << "coaccessible: " << cell_names(x, r.coaccessible) << "\n";
      out << "essential: " << cell_names(x, r.essential) << "\n";
      out << "closure: " << cell_names(x, r.closure) << "\n";
    }
    return kTrue;
  }});

  auto* det = leaf(hda, "det", "Determinism check");
  det->add_option("X", x_arg)->required();
  commands.push_back({det, [&] {
    const auto x = ctx.hda(x_arg);
    const auto v = is_deterministic(x);
    json j{{"deterministic", v.deterministic}};
    std::string text = "deterministic\n";
    if (v.start_witness) {
      const auto [a, b] = *v.start_witness;
      j["start_cells"] = {x.cell(a).name, x.cell(b).name};
      text = "not deterministic: start cells " + x.cell(a).name + " and " + x.cell(b).name +
             " share the event list " + format(x.cell(a).loset) + "\n";
    } else if (v.branch_witness) {
      const auto& w = *v.branch_witness;
      const auto& u = x.cell(w.y).loset;
      json events = json::array();
      std::string started;
      for (std::size_t k : members_of(w.positions)) {
        events.push_back(u.labels[k]);
        started += u.labels[k];
      }
      j["from"] = x.cell(w.x).name;
      j["events"] = events;
      j["cells"] = {x.cell(w.y).name, x.cell(w.z).name};
      text = "not deterministic: from " + x.cell(w.x).name + " starting " + started +
             " reaches essential cells " + x.cell(w.y).name + " and " + x.cell(w.z).name + "\n";
    }
    if (ctx.as_json) {
      ctx.print(j);
    } else {
      out << text;
    }
    return v.deterministic ? kTrue : kFalse;
  }});

  auto* dot = leaf(hda, "dot", "Graphviz rendering");
  dot->add_option("X", x_arg)->required();
  dot->add_option("-o,--output", out_path, "Write to a file instead of stdout");
  commands.push_back({dot, [&] {
    const auto x = ctx.hda(x_arg);
    const auto text = to_dot(x, DotOptions{essential_report(x).essential});
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
    }
    return kTrue;
  }});

  // lang ------------------------------------------------------------------
  auto* lang = app.add_subcommand("lang", "Finite languages");
  lang->require_subcommand(1);
  lang->fallthrough();
  std::string l_arg, prefix_arg, suffix_arg;
  bool pref_family = false;

  auto* quotient = leaf(lang, "quotient", "Prefix quotient P\\L or suffix quotient L/P");
  quotient->add_option("L", l_arg)->required();
  auto* prefix_opt = quotient->add_option("--prefix", prefix_arg, "P for P\\L");
  auto* suffix_opt = quotient->add_option("--suffix", suffix_arg, "P for L/P");
  prefix_opt->excludes(suffix_opt);
  commands.push_back({quotient, [&] {
    if (prefix_arg.empty() && suffix_arg.empty()) throw Error("give --prefix or --suffix");
    const auto l = ctx.language(l_arg);
    const bool is_prefix = !prefix_arg.empty();
    const auto p = ctx.ipomset(is_prefix ? prefix_arg : suffix_arg);
    const auto& q = is_prefix ? l.prefix_quotient(p) : l.suffix_quotient(p);
    if (ctx.as_json) {
      ctx.print(to_json(q));
    } else {
      out << ctx.show(q) << "\n";
    }
    return kTrue;
  }});

  auto* suff = leaf(lang, "suff", "The family of prefix quotients suff(L)");
  suff->add_option("L", l_arg)->required();
  suff->add_flag("--pref", pref_family, "Suffix quotients pref(L) instead");
  commands.push_back({suff, [&] {
    const auto l = ctx.language(l_arg);
    const auto f = pref_family ? prefix_quotient_family(l) : suffix_quotient_family(l);
    if (ctx.as_json) {
      json entries = json::array();
      for (const auto& [p, q] : f.entries) entries.push_back({{"ipomset", ctx.show(p)}, {"quotient", to_json(q)}});
      json values = json::array();
      for (const auto& v : f.values) values.push_back(to_json(v));
      ctx.print(json{{"entries", entries}, {"values", values}, {"count", f.values.size()}});
    } else {
      for (const auto& [p, q] : f.entries) out << ctx.show(p) << " -> " << ctx.show(q) << "\n";
      out << f.values.size() << " distinct quotients (including the empty one)\n";
    }
    return kTrue;
  }});

  auto* pre = leaf(lang, "prefixes", "All P with a nonempty prefix quotient");
  pre->add_option("L", l_arg)->required();
  commands.push_back({pre, [&] {
    const auto ps = ctx.language(l_arg).prefixes();
    if (ctx.as_json) {
      ctx.print(to_json(ps));
    } else {
      for (const auto& p : ps) out << ctx.show(p) << "\n";
    }
    return kTrue;
  }});

  auto* members = leaf(lang, "members", "The down-closed member list");
  members->add_option("L", l_arg)->required();
  commands.push_back({members, [&] {
    const auto l = ctx.language(l_arg);
    if (ctx.as_json) {
      ctx.print(to_json(l.members()));
    } else {
      out << to_lang_text(l);
    }
    return kTrue;
  }});

  auto* equiv = leaf(lang, "equiv", "Weak and strong equivalence of P and Q");
  equiv->add_option("L", l_arg)->required();
  equiv->add_option("P", p_arg)->required();
  equiv->add_option("Q", q_arg)->required();
  commands.push_back({equiv, [&] {
    const auto l = ctx.language(l_arg);
    const auto p = ctx.ipomset(p_arg);
    const auto q = ctx.ipomset(q_arg);
    const bool weak = weak_equiv(p, q, l);
    const auto cex = strong_equiv_counterexample(p, q, l);
    if (ctx.as_json) {
      ctx.print(json{{"weak", weak}, {"strong", !cex.has_value()}});
    } else {
      out << "weak: " << (weak ? "yes" : "no") << "\nstrong: " << (cex ? "no" : "yes") << "\n";
      if (cex && *cex != 0 && fin(p) == fin(q)) {
        const auto pa = remove_targets(p, target_positions_to_events(p, *cex));
        const auto qa = remove_targets(q, target_positions_to_events(q, *cex));
        out << "  " << ctx.show(pa) << " -> " << ctx.show(l.prefix_quotient(pa)) << "\n";
        out << "  " << ctx.show(qa) << " -> " << ctx.show(l.prefix_quotient(qa)) << "\n";
      }
    }
    return cex ? kFalse : kTrue;
  }});

  auto* swapinv = leaf(lang, "swapinv", "Swap-invariance (equivalently: determinism)");
  swapinv->add_option("L", l_arg)->required();
  commands.push_back({swapinv, [&] {
    const auto v = is_swap_invariant(ctx.language(l_arg));
    if (ctx.as_json) {
      json j{{"swap_invariant", v.invariant}};
      if (v.witness) {
        j["witness"] = {{"P", ctx.show(v.witness->first)},
                        {"Q", ctx.show(v.witness->second)},
                        {"P_quotient", to_json(v.p_quotient)},
                        {"Q_quotient", to_json(v.q_quotient)}};
      }
      ctx.print(j);
    } else if (v.invariant) {
      out << "swap-invariant\n";
    } else {
      out << "not swap-invariant: " << ctx.show(v.witness->first) << " is subsumed by "
          << ctx.show(v.witness->second) << "\n";
      out << "  " << ctx.show(v.witness->first) << " -> " << ctx.show(v.p_quotient) << "\n";
      out << "  " << ctx.show(v.witness->second) << " -> " << ctx.show(v.q_quotient) << "\n";
    }
    return v.invariant ? kTrue : kFalse;
  }});

  // mn --------------------------------------------------------------------
  auto* mn = app.add_subcommand("mn", "Myhill-Nerode automaton of a finite language");
  mn->require_subcommand(1);
  mn->fallthrough();
  std::string classes_path, dot_path;
  bool ess_only = false;

  auto* build = leaf(mn, "build", "Build MN(L)");
  build->add_option("L", l_arg)->required();
  build->add_option("-o,--output", out_path, "Write the automaton (.hda)");
  build->add_option("--classes", classes_path, "Write the class table (.json)");
  build->add_option("--dot", dot_path, "Write a Graphviz rendering");
  build->add_flag("--ess", ess_only, "Keep only the essential closure");
  commands.push_back({build, [&] {
    const auto l = ctx.language(l_arg);
    const auto m = build_mn(l);
    const Hda result = ess_only ? ess_closure(m.hda) : m.hda;
    const auto profile = m.essential_profile();
    if (!out_path.empty()) write_file(out_path, to_hda_text(result));
    if (!classes_path.empty()) write_file(classes_path, class_table(m).dump(2) + "\n");
    if (!dot_path.empty()) write_file(dot_path, to_dot(result, DotOptions{essential_report(result).essential}));
    if (ctx.as_json) {
      ctx.print(json{{"cells", m.cells.size()}, {"essential_by_dim", profile}, {"classes", class_table(m)}});
    } else {
      out << m.cells.size() << " cells, essential by dimension:";
      for (auto n : profile) out << " " << n;
      out << "\n";
      for (CellId c = 0; c < m.cells.size(); ++c) {
        const auto& cell = m.cells[c];
        out << "  " << m.hda.cell(c).name << " " << format(cell.loset);
        if (cell.representative) {
          out << " " << ctx.show(*cell.representative) << " -> " << ctx.show(cell.key->quotient());
        } else {
          out << " subsidiary";
        }
        if (m.hda.is_start(c)) out << " start";
        if (m.hda.is_accept(c)) out << " accept";
        out << "\n";
      }
      if (out_path.empty()) out << to_hda_text(result);
    }
    return kTrue;
  }});

  auto* verify = leaf(mn, "verify", "Build MN(L) and check Lang(MN(L)) = L");
  verify->add_option("L", l_arg)->required();
  commands.push_back({verify, [&] {
    const auto l = ctx.language(l_arg);
    const auto m = build_mn(l);
    const auto r = verify_mn(l, m);
    if (ctx.as_json) {
      ctx.print(json{{"ok", r.ok()},
                     {"bound", r.bound},
                     {"missing", to_json(r.missing)},
                     {"extra", to_json(r.extra)},
                     {"essential_mismatch", names_json(m.hda, r.essential_mismatch)},
                     {"accessible_subsidiary", names_json(m.hda, r.accessible_subsidiary)},
                     {"valid", r.validation.ok()}});
    } else {
      out << "language: " << (r.language_ok() ? "ok" : "MISMATCH") << " (" << l.size() << " members, bound "
          << r.bound << ")\n";
      for (const auto& p : r.missing) out << "  missing " << ctx.show(p) << "\n";
      for (const auto& p : r.extra) out << "  extra " << ctx.show(p) << "\n";
      out << "essential cells: " << (r.essential_ok() ? "ok" : "MISMATCH") << "\n";
      out << "precubical identities: " << (r.validation.ok() ? "ok" : "VIOLATED") << "\n";
    }
    return r.ok() ? kTrue : kFalse;
  }});

  // ingest ----------------------------------------------------------------
  auto* ingest = app.add_subcommand("ingest", "Turn an interval log (CSV) into an ipomset");
  ingest->fallthrough();
  std::string log_path;
  std::string tie_break = "begin";
  ingest->add_option("LOG", log_path, "event_id,label,begin,end,open_left,open_right")->required();
  ingest->add_option("--tie-break", tie_break, "Event order of overlapping events")
      ->check(CLI::IsMember({"begin", "input"}));
  commands.push_back({ingest, [&] {
    const auto records = parse_log_csv(read_file(log_path));
    const auto p = ingest_log(records, tie_break == "input" ? TieBreak::input : TieBreak::begin);
    if (ctx.as_json) {
      ctx.print(to_json(p));
    } else {
      out << to_ipo_block(p, "log") << "\n";
      if (auto s = to_shorthand(p, ctx.fmt())) out << "shorthand: " << *s << "\n";
    }
    return kTrue;
  }});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  for (const auto& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    try {
      return cmd.action();
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kError;
    }
  }
  err << "error: no command given\n";
  return kError;
}

}  // namespace hdakit::cli
