#include "hdakit/json_io.hpp"

#include "hdakit/text.hpp"

namespace hdakit {

using nlohmann::json;

json to_json(const Ipomset& p) {
  const std::size_t n = p.size();
  json prec = json::array();
  json evord = json::array();
  json source = json::array();
  json target = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json prow = json::array();
    json erow = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      prow.push_back(p.precedes(i, j) ? 1 : 0);
      erow.push_back(p.event_before(i, j) ? 1 : 0);
    }
    prec.push_back(std::move(prow));
    evord.push_back(std::move(erow));
    source.push_back(p.is_source(i));
    target.push_back(p.is_target(i));
  }
  return json{{"size", n},       {"labels", p.labels()}, {"source", source}, {"target", target},
              {"prec", prec},    {"evord", evord},       {"text", format(p)}};
}

json to_json(const Loset& u) { return u.labels; }

json to_json(const StepSequence& seq) {
  json steps = json::array();
  for (const auto& st : seq.steps) {
    steps.push_back({{"kind", st.kind == StepKind::starter ? "starter" : "terminator"},
                     {"loset", st.loset.labels},
                     {"active", members_of(st.active)},
                     {"text", format(st)}});
  }
  return json{{"initial", seq.initial_loset.labels}, {"steps", steps}};
}

json to_json(const std::vector<Ipomset>& set) {
  json out = json::array();
  for (const auto& p : set) out.push_back(to_json(p));
  return out;
}

json to_json(const Hda& x) {
  auto names = [&](const std::vector<CellId>& ids) {
    json out = json::array();
    for (CellId c : ids) out.push_back(c == kNoCell ? json(nullptr) : json(x.cell(c).name));
    return out;
  };
  json cells = json::array();
  for (const auto& cell : x.cells()) {
    cells.push_back({{"id", cell.name}, {"loset", cell.loset.labels}, {"d0", names(cell.lower)},
                     {"d1", names(cell.upper)}});
  }
  return json{{"name", x.name()}, {"cells", cells}, {"start", names(x.start())}, {"accept", names(x.accept())}};
}

json path_to_json(const Hda& x, const Path& p) {
  json steps = json::array();
  CellId cur = p.start;
  for (const auto& st : p.steps) {
    const auto& higher = x.cell(st.up ? st.cell : cur).loset;
    json labels = json::array();
    for (std::size_t k : members_of(st.positions)) labels.push_back(higher.labels[k]);
    steps.push_back({{"up", st.up}, {"positions", members_of(st.positions)}, {"labels", labels},
                     {"cell", x.cell(st.cell).name}});
    cur = st.cell;
  }
  return json{{"start", x.cell(p.start).name},
              {"end", x.cell(p.end()).name},
              {"steps", steps},
              {"text", format_path(x, p)}};
}

json class_table(const MnAutomaton& m) {
  json out = json::array();
  for (CellId c = 0; c < m.cells.size(); ++c) {
    const auto& cell = m.cells[c];
    json entry{{"id", m.hda.cell(c).name},
               {"loset", cell.loset.labels},
               {"subsidiary", cell.kind == MnCell::Kind::subsidiary},
               {"essential", cell.essential},
               {"start", m.hda.is_start(c)},
               {"accept", m.hda.is_accept(c)}};
    if (cell.representative) {
      entry["representative"] = format(*cell.representative);
      entry["representative_block"] = to_ipo_block(*cell.representative, m.hda.cell(c).name, false);
      json quotient = json::array();
      for (const auto& q : cell.key->quotient()) quotient.push_back(format(q));
      entry["quotient"] = quotient;
      entry["signature"] = format(cell.key->signature);
    } else {
      entry["representative"] = nullptr;
      entry["quotient"] = json::array();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace hdakit
