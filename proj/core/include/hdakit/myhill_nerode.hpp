#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdakit/hda.hpp"
#include "hdakit/language.hpp"
#include "hdakit/steps.hpp"

namespace hdakit {

/// Invariant of the strong equivalence class of P: the signature fin(P)
/// and (P−A)\L for every A ⊆ rfin(P), the A = ∅ entry first. Subsets are
/// listed in increasing order of their position bitmask.
struct ClassKey {
  StarterTerminator signature;
  std::vector<Quotient> family;

  const Quotient& quotient() const { return family.front(); }
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

ClassKey classify(const Ipomset& p, const LanguageSet& l);

struct MnCell {
  enum class Kind { regular, subsidiary };
  Kind kind = Kind::regular;
  Loset loset;
  /// First representative met during the construction (regular cells only).
  std::optional<Ipomset> representative;
  std::optional<ClassKey> key;
  /// Nonempty prefix quotient.
  bool essential = false;
};

struct MnAutomaton {
  Hda hda;
  std::vector<MnCell> cells;  // indexed by CellId
  std::map<ClassKey, CellId> regular;
  std::map<Loset, CellId> subsidiary;

  /// Cell of the class of p, if that class was reached.
  std::optional<CellId> cell_of(const Ipomset& p, const LanguageSet& l) const;
  /// Cells with a nonempty quotient, i.e. ess(MN(L)).
  std::vector<CellId> essential_cells() const;
  /// Number of essential cells of each dimension.
  std::vector<std::size_t> essential_profile() const;
};

struct MnOptions {
  /// Shuffle the seed prefixes before the closure. Cell numbering changes,
  /// the automaton up to renaming must not.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Face closure of the prefix classes of L. Throws NotDownClosed.
MnAutomaton build_mn(const LanguageSet& l, const MnOptions& opts = {});

/// Name-independent description of the automaton: one line per cell, cells
/// identified by their class key. Equal for isomorphic constructions.
std::vector<std::string> canonical_signature(const MnAutomaton& m);

struct MnVerifyReport {
  std::size_t bound = 0;
  std::vector<Ipomset> missing;  // in L, not accepted
  std::vector<Ipomset> extra;    // accepted, not in L
  /// Cells where reachability and quotient emptiness disagree.
  std::vector<CellId> essential_mismatch;
  /// Subsidiary cells that are accessible.
  std::vector<CellId> accessible_subsidiary;
  ValidationReport validation;

  bool language_ok() const { return missing.empty() && extra.empty(); }
  bool essential_ok() const { return essential_mismatch.empty() && accessible_subsidiary.empty(); }
  bool ok() const { return language_ok() && essential_ok() && validation.ok(); }
};

/// Lang(M) = L up to 2·max|P| + 2 sparse steps, ess(M) = classes with a
/// nonempty quotient, and the precubical identities.
MnVerifyReport verify_mn(const LanguageSet& l, const MnAutomaton& m);

}  // namespace hdakit
