#include "hdakit/steps.hpp"

#include "hdakit/errors.hpp"
#include "step_walk.hpp"

namespace hdakit {

Ipomset StarterTerminator::to_ipomset() const {
  return kind == StepKind::starter ? starter(loset, active) : terminator(loset, active);
}

Loset StarterTerminator::source_loset() const {
  return kind == StepKind::starter ? loset.without(active) : loset;
}

Loset StarterTerminator::target_loset() const {
  return kind == StepKind::terminator ? loset.without(active) : loset;
}

bool StepSequence::is_sparse() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].active == 0) return false;
    if (i > 0 && steps[i].kind == steps[i - 1].kind) return false;
  }
  return true;
}

StepSequence sparse_decomposition(const Ipomset& p) {
  std::vector<EventSet> succ(p.size()), pred(p.size()), ev(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    succ[i] = p.successors(i);
    pred[i] = p.predecessors(i);
    ev[i] = p.later_in_event_order(i);
  }
  const detail::OrderView view{p.size(), p.sources(), p.targets(), &succ, &pred, &ev};
  const auto walk = detail::walk_steps(view);

  StepSequence seq;
  for (std::size_t e : walk.initial) seq.initial_loset.labels.push_back(p.label(e));
  for (const auto& ws : walk.steps) {
    StarterTerminator st;
    st.kind = ws.is_starter ? StepKind::starter : StepKind::terminator;
    for (std::size_t k = 0; k < ws.loset.size(); ++k) {
      st.loset.labels.push_back(p.label(ws.loset[k]));
      if (has(ws.active, ws.loset[k])) st.active |= bit(k);
    }
    seq.steps.push_back(std::move(st));
  }
  return seq;
}

Ipomset compose(const StepSequence& seq) {
  Ipomset acc = identity(seq.initial_loset);
  for (const auto& st : seq.steps) acc = glue(acc, st.to_ipomset());
  return acc;
}

StarterTerminator fin(const Ipomset& p) {
  StarterTerminator st;
  st.kind = StepKind::starter;
  st.loset = p.target_loset();
  st.active = events_to_target_positions(p, rfin(p));
  return st;
}

}  // namespace hdakit
