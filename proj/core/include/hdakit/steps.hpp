#pragma once

#include <vector>

#include "hdakit/ipomset.hpp"

namespace hdakit {

enum class StepKind { starter, terminator };

/// A starter U↑A or terminator U↓A. `active` holds positions of `loset`.
struct StarterTerminator {
  StepKind kind = StepKind::starter;
  Loset loset;
  EventSet active = 0;

  Ipomset to_ipomset() const;
  /// Loset before / after the step.
  Loset source_loset() const;
  Loset target_loset() const;

  friend bool operator==(const StarterTerminator&, const StarterTerminator&) = default;
  friend auto operator<=>(const StarterTerminator&, const StarterTerminator&) = default;
};

struct StepSequence {
  Loset initial_loset;
  std::vector<StarterTerminator> steps;

  /// Kinds strictly alternate and no step is an identity.
  bool is_sparse() const;
  friend bool operator==(const StepSequence&, const StepSequence&) = default;
};

/// The unique sparse step decomposition.
StepSequence sparse_decomposition(const Ipomset& p);

/// Glue the steps back together. Throws InterfaceMismatch if adjacent steps
/// do not compose.
Ipomset compose(const StepSequence& seq);

/// Target signature fin(P) = T_P↑(T_P − S_P).
StarterTerminator fin(const Ipomset& p);

}  // namespace hdakit
