#include "hdakit/myhill_nerode.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "hdakit/errors.hpp"
#include "hdakit/refine.hpp"
#include "hdakit/text.hpp"

namespace hdakit {

ClassKey classify(const Ipomset& p, const LanguageSet& l) {
  ClassKey key;
  key.signature = fin(p);
  const EventSet mask = key.signature.active;
  for (EventSet a = 0;; a = (a - mask) & mask) {
    key.family.push_back(l.prefix_quotient(remove_targets(p, target_positions_to_events(p, a))));
    if (a == mask) break;
  }
  return key;
}

std::optional<CellId> MnAutomaton::cell_of(const Ipomset& p, const LanguageSet& l) const {
  auto it = regular.find(classify(p, l));
  if (it == regular.end()) return std::nullopt;
  return it->second;
}

std::vector<CellId> MnAutomaton::essential_cells() const {
  std::vector<CellId> out;
  for (CellId c = 0; c < cells.size(); ++c) {
    if (cells[c].essential) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> MnAutomaton::essential_profile() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) {
    if (!c.essential) continue;
    if (out.size() <= c.loset.size()) out.resize(c.loset.size() + 1, 0);
    ++out[c.loset.size()];
  }
  return out;
}

namespace {

std::string subsidiary_name(const Loset& u) {
  std::string out = "w_";
  for (std::size_t i = 0; i < u.size(); ++i) out += (i > 0 ? "." : "") + u.labels[i];
  return out;
}

class Builder {
 public:
  explicit Builder(const LanguageSet& l) : l_(l) {}

  MnAutomaton run(std::vector<Ipomset> seeds) {
    for (const auto& p : seeds) regular_cell(p);
    while (!queue_.empty()) {
      const CellId c = queue_.front();
      queue_.pop_front();
      expand(c);
    }
    mark_start_and_accept();
    return std::move(m_);
  }

 private:
  CellId regular_cell(const Ipomset& p) {
    ClassKey key = classify(p, l_);
    if (auto it = m_.regular.find(key); it != m_.regular.end()) return it->second;
    MnCell cell;
    cell.kind = MnCell::Kind::regular;
    cell.loset = p.target_loset();
    cell.representative = p;
    cell.essential = !key.quotient().empty();
    cell.key = key;
    const CellId id = m_.hda.add_cell("c" + std::to_string(m_.regular.size()), cell.loset);
    m_.cells.push_back(std::move(cell));
    m_.regular.emplace(std::move(key), id);
    queue_.push_back(id);
    return id;
  }

  CellId subsidiary_cell(const Loset& u) {
    if (auto it = m_.subsidiary.find(u); it != m_.subsidiary.end()) return it->second;
    MnCell cell;
    cell.kind = MnCell::Kind::subsidiary;
    cell.loset = u;
    const CellId id = m_.hda.add_cell(subsidiary_name(u), u);
    m_.cells.push_back(std::move(cell));
    m_.subsidiary.emplace(u, id);
    queue_.push_back(id);
    return id;
  }

  void expand(CellId c) {
    const Loset u = m_.cells[c].loset;
    if (m_.cells[c].kind == MnCell::Kind::subsidiary) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        const CellId w = subsidiary_cell(u.without(bit(i)));
        m_.hda.set_face(c, FaceKind::lower, i, w);
        m_.hda.set_face(c, FaceKind::upper, i, w);
      }
      return;
    }
    const Ipomset p = *m_.cells[c].representative;
    const EventSet removable = rfin(p);
    for (std::size_t i = 0; i < u.size(); ++i) {
      const EventSet e = target_positions_to_events(p, bit(i));
      const CellId lower = (e & removable) != 0 ? regular_cell(remove_targets(p, e))
                                                : subsidiary_cell(u.without(bit(i)));
      m_.hda.set_face(c, FaceKind::lower, i, lower);
      m_.hda.set_face(c, FaceKind::upper, i, regular_cell(glue(p, terminator(u, bit(i)))));
    }
  }

  void mark_start_and_accept() {
    std::map<Loset, ClassKey> identity_keys;
    for (CellId c = 0; c < m_.cells.size(); ++c) {
      const auto& cell = m_.cells[c];
      if (cell.kind != MnCell::Kind::regular) continue;
      auto it = identity_keys.find(cell.loset);
      if (it == identity_keys.end()) {
        it = identity_keys.emplace(cell.loset, classify(identity(cell.loset), l_)).first;
      }
      if (*cell.key == it->second) m_.hda.add_start(c);
      const auto& q = cell.key->quotient();
      if (std::binary_search(q.begin(), q.end(), identity(cell.loset))) m_.hda.add_accept(c);
    }
  }

  const LanguageSet& l_;
  MnAutomaton m_;
  std::deque<CellId> queue_;
};

}  // namespace

MnAutomaton build_mn(const LanguageSet& l, const MnOptions& opts) {
  for (const auto& m : l.members()) {
    for (const auto& r : refinements(m)) {
      if (!l.contains(r)) throw NotDownClosed("language is not closed under subsumption: " + format(r));
    }
  }
  auto seeds = l.prefixes();
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(seeds.begin(), seeds.end(), rng);
  }
  MnAutomaton m = Builder(l).run(std::move(seeds));
  m.hda.set_name("MN");
  return m;
}

std::vector<std::string> canonical_signature(const MnAutomaton& m) {
  // Rank cells by class key (regular) or loset (subsidiary).
  std::vector<CellId> order(m.cells.size());
  for (CellId c = 0; c < order.size(); ++c) order[c] = c;
  auto sort_key = [&](CellId c) {
    const auto& cell = m.cells[c];
    return std::make_tuple(cell.kind, cell.loset, cell.key);
  };
  std::sort(order.begin(), order.end(), [&](CellId a, CellId b) { return sort_key(a) < sort_key(b); });
  std::vector<std::size_t> rank(m.cells.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  std::vector<std::string> out;
  for (CellId c : order) {
    const auto& cell = m.cells[c];
    std::string line = std::to_string(rank[c]) + " ";
    if (cell.kind == MnCell::Kind::subsidiary) {
      line += "w" + format(cell.loset);
    } else {
      line += format(cell.key->signature);
      for (const auto& q : cell.key->family) line += " " + format(q);
    }
    const auto& hc = m.hda.cell(c);
    for (std::size_t i = 0; i < hc.dim(); ++i) {
      line += " d0=" + std::to_string(rank[hc.lower[i]]) + " d1=" + std::to_string(rank[hc.upper[i]]);
    }
    if (m.hda.is_start(c)) line += " start";
    if (m.hda.is_accept(c)) line += " accept";
    out.push_back(std::move(line));
  }
  return out;
}

MnVerifyReport verify_mn(const LanguageSet& l, const MnAutomaton& m) {
  MnVerifyReport r;
  r.validation = validate(m.hda);
  if (!r.validation.ok()) return r;

  std::size_t longest = 0;
  for (const auto& p : l.members()) longest = std::max(longest, p.size());
  r.bound = 2 * longest + 2;
  const auto accepted = enumerate_language(m.hda, r.bound);
  std::set_difference(l.members().begin(), l.members().end(), accepted.begin(), accepted.end(),
                      std::back_inserter(r.missing));
  std::set_difference(accepted.begin(), accepted.end(), l.members().begin(), l.members().end(),
                      std::back_inserter(r.extra));

  const auto ess = essential_report(m.hda);
  for (CellId c = 0; c < m.cells.size(); ++c) {
    const bool reachable = std::binary_search(ess.essential.begin(), ess.essential.end(), c);
    if (reachable != m.cells[c].essential) r.essential_mismatch.push_back(c);
    if (m.cells[c].kind == MnCell::Kind::subsidiary &&
        std::binary_search(ess.accessible.begin(), ess.accessible.end(), c)) {
      r.accessible_subsidiary.push_back(c);
    }
  }
  return r;
}

}  // namespace hdakit
