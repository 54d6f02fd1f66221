#include "hdakit/hda.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

#include "hdakit/errors.hpp"
#include "hdakit/steps.hpp"

namespace hdakit {

namespace {

constexpr std::string_view kUpArrow = "\xE2\x86\x97";    // ↗
constexpr std::string_view kDownArrow = "\xE2\x86\x98";  // ↘

std::vector<CellId> sorted(std::set<CellId> s) { return {s.begin(), s.end()}; }

// Positions of a smaller loset, expressed as positions of the bigger loset
// from which `removed` was taken out.
EventSet lift(EventSet small, EventSet removed, std::size_t big_dim) {
  EventSet out = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < big_dim; ++i) {
    if (has(removed, i)) continue;
    if (has(small, k)) out |= bit(i);
    ++k;
  }
  return out;
}

std::string active_labels(const Loset& u, EventSet positions) {
  std::string out;
  for (std::size_t k : members_of(positions)) {
    const auto& l = u.labels[k];
    out += l.size() == 1 ? l : "{" + l + "}";
  }
  return out;
}

}  // namespace

CellId Hda::add_cell(std::string name, Loset loset) {
  if (by_name_.contains(name)) throw Error("duplicate cell name '" + name + "'");
  if (loset.size() > kMaxEvents) throw Error("cell '" + name + "' has too many dimensions");
  const CellId id = cells_.size();
  by_name_.emplace(name, id);
  Cell c;
  c.name = std::move(name);
  c.lower.assign(loset.size(), kNoCell);
  c.upper.assign(loset.size(), kNoCell);
  c.loset = std::move(loset);
  cells_.push_back(std::move(c));
  lower_cofaces_.emplace_back();
  upper_cofaces_.emplace_back();
  return id;
}

void Hda::set_face(CellId cell, FaceKind kind, std::size_t pos, CellId target) {
  auto& c = cells_.at(cell);
  if (pos >= c.dim()) throw std::out_of_range("face position out of range for cell '" + c.name + "'");
  if (target >= cells_.size()) throw std::out_of_range("face target is not a cell");
  auto& slot = kind == FaceKind::lower ? c.lower[pos] : c.upper[pos];
  auto& index = kind == FaceKind::lower ? lower_cofaces_ : upper_cofaces_;
  if (slot != kNoCell) {
    auto& old = index[slot];
    old.erase(std::remove_if(old.begin(), old.end(),
                             [&](const Coface& f) { return f.cell == cell && f.pos == pos; }),
              old.end());
  }
  slot = target;
  index[target].push_back({cell, pos});
}

void Hda::add_start(CellId c) {
  if (c >= cells_.size()) throw std::out_of_range("start cell does not exist");
  if (!is_start(c)) start_.insert(std::upper_bound(start_.begin(), start_.end(), c), c);
}

void Hda::add_accept(CellId c) {
  if (c >= cells_.size()) throw std::out_of_range("accept cell does not exist");
  if (!is_accept(c)) accept_.insert(std::upper_bound(accept_.begin(), accept_.end(), c), c);
}

void Hda::remove_accept(CellId c) { accept_.erase(std::remove(accept_.begin(), accept_.end(), c), accept_.end()); }

std::optional<CellId> Hda::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Hda::is_start(CellId c) const { return std::binary_search(start_.begin(), start_.end(), c); }
bool Hda::is_accept(CellId c) const { return std::binary_search(accept_.begin(), accept_.end(), c); }

CellId Hda::face(CellId c, FaceKind kind, std::size_t pos) const {
  const auto& cell = cells_.at(c);
  if (pos >= cell.dim()) throw std::out_of_range("face position out of range for cell '" + cell.name + "'");
  return kind == FaceKind::lower ? cell.lower[pos] : cell.upper[pos];
}

const std::vector<Hda::Coface>& Hda::cofaces(CellId c, FaceKind kind) const {
  return kind == FaceKind::lower ? lower_cofaces_.at(c) : upper_cofaces_.at(c);
}

std::vector<CellId> Hda::cells_of(const Loset& u) const {
  std::vector<CellId> out;
  for (CellId c = 0; c < cells_.size(); ++c) {
    if (cells_[c].loset == u) out.push_back(c);
  }
  return out;
}

std::size_t Hda::count_of_dim(std::size_t d) const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [d](const Cell& c) { return c.dim() == d; }));
}

ValidationReport validate(const Hda& x) {
  ValidationReport r;
  for (CellId c = 0; c < x.size(); ++c) {
    const auto& cell = x.cell(c);
    for (std::size_t i = 0; i < cell.dim(); ++i) {
      for (auto kind : {FaceKind::lower, FaceKind::upper}) {
        const char* nm = kind == FaceKind::lower ? "d0" : "d1";
        const CellId f = x.face(c, kind, i);
        if (f == kNoCell) {
          r.issues.push_back({ValidationIssue::Kind::missing_face, c, i, i,
                              "cell '" + cell.name + "' has no " + nm + "(" + std::to_string(i + 1) + ")"});
        } else if (x.cell(f).loset != cell.loset.without(bit(i))) {
          r.issues.push_back({ValidationIssue::Kind::face_typing, c, i, i,
                              "cell '" + cell.name + "': " + nm + "(" + std::to_string(i + 1) + ") = '" +
                                  x.cell(f).name + "' has the wrong event list"});
        }
      }
    }
  }
  if (!r.ok()) return r;

  for (CellId c = 0; c < x.size(); ++c) {
    const auto& cell = x.cell(c);
    for (std::size_t j = 0; j < cell.dim(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (auto nu : {FaceKind::lower, FaceKind::upper}) {
          for (auto mu : {FaceKind::lower, FaceKind::upper}) {
            const CellId lhs = x.face(x.face(c, mu, j), nu, i);
            const CellId rhs = x.face(x.face(c, nu, i), mu, j - 1);
            if (lhs == rhs) continue;
            auto name = [](FaceKind k) { return k == FaceKind::lower ? "d0" : "d1"; };
            r.issues.push_back({ValidationIssue::Kind::identity, c, i, j,
                                "cell '" + cell.name + "': " + name(nu) + "(" + std::to_string(i + 1) +
                                    ")" + name(mu) + "(" + std::to_string(j + 1) + ") = '" +
                                    x.cell(lhs).name + "' but " + name(mu) + "(" + std::to_string(j) +
                                    ")" + name(nu) + "(" + std::to_string(i + 1) + ") = '" +
                                    x.cell(rhs).name + "'"});
          }
        }
      }
    }
  }
  return r;
}

void check_valid(const Hda& x) {
  const auto r = validate(x);
  if (r.ok()) return;
  const auto& first = r.issues.front();
  if (first.kind == ValidationIssue::Kind::identity) throw IdentityViolation(first.message);
  throw FaceTypingError(first.message);
}

CellId composite_face(const Hda& x, CellId c, FaceKind kind, EventSet positions) {
  if ((positions & ~all_of(x.cell(c).dim())) != 0) {
    throw std::out_of_range("face positions out of range for cell '" + x.cell(c).name + "'");
  }
  auto ps = members_of(positions);
  for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
    const CellId next = x.face(c, kind, *it);
    if (next == kNoCell) throw FaceTypingError("cell '" + x.cell(c).name + "' is missing a face");
    c = next;
  }
  return c;
}

bool is_valid_path(const Hda& x, const Path& p) {
  if (p.start >= x.size()) return false;
  CellId cur = p.start;
  for (const auto& st : p.steps) {
    if (st.cell >= x.size()) return false;
    const CellId higher = st.up ? st.cell : cur;
    if ((st.positions & ~all_of(x.cell(higher).dim())) != 0) return false;
    if (st.up) {
      if (composite_face(x, st.cell, FaceKind::lower, st.positions) != cur) return false;
    } else {
      if (composite_face(x, cur, FaceKind::upper, st.positions) != st.cell) return false;
    }
    cur = st.cell;
  }
  return true;
}

bool is_accepting(const Hda& x, const Path& p) { return x.is_start(p.start) && x.is_accept(p.end()); }

Ipomset ev_of_path(const Hda& x, const Path& p) {
  Ipomset acc = identity(x.cell(p.start).loset);
  CellId cur = p.start;
  for (const auto& st : p.steps) {
    if (st.up) {
      acc = glue(acc, starter(x.cell(st.cell).loset, st.positions));
    } else {
      acc = glue(acc, terminator(x.cell(cur).loset, st.positions));
    }
    cur = st.cell;
  }
  return acc;
}

Path sparse_normalize(const Hda& x, const Path& p) {
  Path out{p.start, {}};
  CellId before_last = p.start;  // cell preceding out.steps.back()
  CellId cur = p.start;
  for (const auto& st : p.steps) {
    if (st.positions == 0) {
      cur = st.cell;
      continue;
    }
    if (!out.steps.empty() && out.steps.back().up == st.up) {
      auto& last = out.steps.back();
      if (st.up) {
        // before_last ↗A cur ↗B st.cell, A in cur's positions.
        last.positions = lift(last.positions, st.positions, x.cell(st.cell).dim()) | st.positions;
      } else {
        // before_last ↘A cur ↘B st.cell, B in cur's positions.
        last.positions |= lift(st.positions, last.positions, x.cell(before_last).dim());
      }
      last.cell = st.cell;
    } else {
      before_last = cur;
      out.steps.push_back(st);
    }
    cur = st.cell;
  }
  return out;
}

bool is_sparse(const Path& p) {
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i].positions == 0) return false;
    if (i > 0 && p.steps[i].up == p.steps[i - 1].up) return false;
  }
  return true;
}

std::string format_path(const Hda& x, const Path& p, bool ascii) {
  std::string out = x.cell(p.start).name;
  CellId cur = p.start;
  for (const auto& st : p.steps) {
    const CellId higher = st.up ? st.cell : cur;
    std::string arrow;
    if (ascii) {
      arrow = st.up ? "+" : "-";
    } else {
      arrow = std::string(st.up ? kUpArrow : kDownArrow);
    }
    out += " " + arrow + active_labels(x.cell(higher).loset, st.positions) + " " + x.cell(st.cell).name;
    cur = st.cell;
  }
  return out;
}

namespace {

std::set<CellId> search(const Hda& x, const std::vector<CellId>& seeds, bool forward) {
  std::set<CellId> seen(seeds.begin(), seeds.end());
  std::deque<CellId> queue(seeds.begin(), seeds.end());
  auto visit = [&](CellId c) {
    if (seen.insert(c).second) queue.push_back(c);
  };
  while (!queue.empty()) {
    const CellId c = queue.front();
    queue.pop_front();
    const auto& cell = x.cell(c);
    if (forward) {
      // Downsteps terminate an event; upsteps start one.
      for (std::size_t i = 0; i < cell.dim(); ++i) visit(cell.upper[i]);
      for (const auto& cf : x.cofaces(c, FaceKind::lower)) visit(cf.cell);
    } else {
      for (std::size_t i = 0; i < cell.dim(); ++i) visit(cell.lower[i]);
      for (const auto& cf : x.cofaces(c, FaceKind::upper)) visit(cf.cell);
    }
  }
  return seen;
}

}  // namespace

EssentialReport essential_report(const Hda& x) {
  EssentialReport r;
  const auto acc = search(x, x.start(), true);
  const auto co = search(x, x.accept(), false);
  r.accessible = sorted(acc);
  r.coaccessible = sorted(co);
  std::set_intersection(acc.begin(), acc.end(), co.begin(), co.end(), std::back_inserter(r.essential));

  std::set<CellId> closure(r.essential.begin(), r.essential.end());
  std::deque<CellId> queue(r.essential.begin(), r.essential.end());
  while (!queue.empty()) {
    const CellId c = queue.front();
    queue.pop_front();
    const auto& cell = x.cell(c);
    for (std::size_t i = 0; i < cell.dim(); ++i) {
      for (CellId f : {cell.lower[i], cell.upper[i]}) {
        if (closure.insert(f).second) queue.push_back(f);
      }
    }
  }
  r.closure = sorted(closure);
  return r;
}

Hda ess_closure(const Hda& x) {
  const auto r = essential_report(x);
  Hda out(x.name());
  std::vector<CellId> map(x.size(), kNoCell);
  for (CellId c : r.closure) map[c] = out.add_cell(x.cell(c).name, x.cell(c).loset);
  for (CellId c : r.closure) {
    const auto& cell = x.cell(c);
    for (std::size_t i = 0; i < cell.dim(); ++i) {
      out.set_face(map[c], FaceKind::lower, i, map[cell.lower[i]]);
      out.set_face(map[c], FaceKind::upper, i, map[cell.upper[i]]);
    }
  }
  for (CellId c : x.start()) {
    if (map[c] != kNoCell) out.add_start(map[c]);
  }
  for (CellId c : x.accept()) {
    if (map[c] != kNoCell) out.add_accept(map[c]);
  }
  return out;
}

std::optional<Path> member(const Hda& x, const Ipomset& p) {
  const auto seq = sparse_decomposition(p);
  // layers[k]: cell reached after k steps ↦ cell it came from.
  std::vector<std::map<CellId, CellId>> layers(1);
  for (CellId c : x.start()) {
    if (x.cell(c).loset == seq.initial_loset) layers[0].emplace(c, kNoCell);
  }
  for (const auto& st : seq.steps) {
    std::map<CellId, CellId> next;
    if (st.kind == StepKind::starter) {
      const auto candidates = x.cells_of(st.loset);
      for (CellId y : candidates) {
        const CellId below = composite_face(x, y, FaceKind::lower, st.active);
        if (layers.back().contains(below)) next.emplace(y, below);
      }
    } else {
      for (const auto& [c, from] : layers.back()) {
        next.emplace(composite_face(x, c, FaceKind::upper, st.active), c);
      }
    }
    if (next.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }
  for (const auto& [c, from] : layers.back()) {
    if (!x.is_accept(c)) continue;
    Path path;
    path.steps.resize(seq.steps.size());
    CellId cur = c;
    for (std::size_t k = seq.steps.size(); k > 0; --k) {
      path.steps[k - 1] = {seq.steps[k - 1].kind == StepKind::starter, seq.steps[k - 1].active, cur};
      cur = layers[k].at(cur);
    }
    path.start = cur;
    return path;
  }
  return std::nullopt;
}

namespace {

// ups[c]: (y, A) with δ⁰_A(y) = c, A nonempty, y coaccessible.
std::vector<std::vector<std::pair<CellId, EventSet>>> upsteps(const Hda& x, const std::vector<bool>& live) {
  std::vector<std::vector<std::pair<CellId, EventSet>>> ups(x.size());
  for (CellId y = 0; y < x.size(); ++y) {
    if (!live[y]) continue;
    const EventSet all = all_of(x.cell(y).dim());
    for (EventSet a = all; a != 0; a = (a - 1) & all) {
      ups[composite_face(x, y, FaceKind::lower, a)].emplace_back(y, a);
    }
  }
  return ups;
}

// Cells from which an accept cell is reachable; accepting paths stay inside.
std::vector<bool> coaccessible_mask(const Hda& x) {
  std::vector<bool> live(x.size(), false);
  for (CellId c : search(x, x.accept(), false)) live[c] = true;
  return live;
}

}  // namespace

std::vector<Path> enumerate_sparse_paths(const Hda& x, std::size_t max_steps) {
  const auto live = coaccessible_mask(x);
  const auto ups = upsteps(x, live);
  std::vector<Path> out;
  Path cur;
  // last: 0 none, 1 up, 2 down
  auto dfs = [&](auto&& self, CellId c, int last) -> void {
    if (x.is_accept(c)) out.push_back(cur);
    if (cur.steps.size() >= max_steps) return;
    if (last != 1) {
      for (const auto& [y, a] : ups[c]) {
        cur.steps.push_back({true, a, y});
        self(self, y, 1);
        cur.steps.pop_back();
      }
    }
    if (last != 2) {
      const EventSet all = all_of(x.cell(c).dim());
      for (EventSet b = all; b != 0; b = (b - 1) & all) {
        const CellId y = composite_face(x, c, FaceKind::upper, b);
        if (!live[y]) continue;
        cur.steps.push_back({false, b, y});
        self(self, y, 2);
        cur.steps.pop_back();
      }
    }
  };
  for (CellId s : x.start()) {
    if (!live[s]) continue;
    cur = Path{s, {}};
    dfs(dfs, s, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ipomset> enumerate_language(const Hda& x, std::size_t max_steps) {
  // Breadth-first over (cell, direction of last step, event ipomset so far).
  // Paths reaching the same state have the same future, so each state is
  // expanded once, at its smallest depth.
  const auto live = coaccessible_mask(x);
  const auto ups = upsteps(x, live);
  using State = std::tuple<CellId, int, Ipomset>;
  std::set<State> seen;
  std::vector<State> layer;
  for (CellId s : x.start()) {
    if (live[s] && seen.emplace(s, 0, identity(x.cell(s).loset)).second) {
      layer.emplace_back(s, 0, identity(x.cell(s).loset));
    }
  }
  std::set<Ipomset> out;
  for (std::size_t depth = 0; !layer.empty(); ++depth) {
    std::vector<State> next;
    auto visit = [&](CellId c, int last, Ipomset p) {
      State st{c, last, std::move(p)};
      if (seen.insert(st).second) next.push_back(std::move(st));
    };
    for (const auto& [c, last, p] : layer) {
      if (x.is_accept(c)) out.insert(p);
      if (depth >= max_steps) continue;
      if (last != 1) {
        for (const auto& [y, a] : ups[c]) visit(y, 1, glue(p, starter(x.cell(y).loset, a)));
      }
      if (last != 2) {
        const EventSet all = all_of(x.cell(c).dim());
        for (EventSet b = all; b != 0; b = (b - 1) & all) {
          const CellId y = composite_face(x, c, FaceKind::upper, b);
          if (live[y]) visit(y, 2, glue(p, terminator(x.cell(c).loset, b)));
        }
      }
    }
    layer = std::move(next);
  }
  return {out.begin(), out.end()};
}

DeterminismVerdict is_deterministic(const Hda& x) {
  DeterminismVerdict v;
  std::map<Loset, CellId> start_by_loset;
  for (CellId s : x.start()) {
    auto [it, fresh] = start_by_loset.emplace(x.cell(s).loset, s);
    if (!fresh) {
      v.deterministic = false;
      v.start_witness.emplace(it->second, s);
      return v;
    }
  }
  const auto ess = essential_report(x).essential;
  auto essential = [&](CellId c) { return std::binary_search(ess.begin(), ess.end(), c); };
  std::map<std::tuple<CellId, Loset, EventSet>, CellId> seen;
  for (CellId y : ess) {
    const EventSet all = all_of(x.cell(y).dim());
    for (EventSet a = 1; a != 0 && a <= all; ++a) {
      if ((a & ~all) != 0) continue;
      const CellId below = composite_face(x, y, FaceKind::lower, a);
      if (!essential(below)) continue;
      auto [it, fresh] = seen.emplace(std::make_tuple(below, x.cell(y).loset, a), y);
      if (!fresh) {
        v.deterministic = false;
        v.branch_witness = DeterminismVerdict::Branch{below, a, it->second, y};
        return v;
      }
    }
  }
  return v;
}

}  // namespace hdakit
