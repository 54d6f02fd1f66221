#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdakit/ipomset.hpp"

namespace hdakit {

using CellId = std::size_t;
inline constexpr CellId kNoCell = std::numeric_limits<CellId>::max();

enum class FaceKind { lower, upper };  // δ⁰ unstarts, δ¹ terminates

struct Cell {
  std::string name;
  Loset loset;
  /// Singleton faces per loset position; kNoCell until set.
  std::vector<CellId> lower;
  std::vector<CellId> upper;

  std::size_t dim() const { return loset.size(); }
};

/// Finite higher-dimensional automaton. Only singleton faces are stored;
/// composite faces are derived from them.
class Hda {
 public:
  Hda() = default;
  explicit Hda(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  CellId add_cell(std::string name, Loset loset);
  /// δ^ν_{pos}(cell) = target, pos 0-based.
  void set_face(CellId cell, FaceKind kind, std::size_t pos, CellId target);
  void add_start(CellId c);
  void add_accept(CellId c);
  void remove_accept(CellId c);

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(CellId c) const { return cells_.at(c); }
  const std::vector<Cell>& cells() const { return cells_; }
  std::optional<CellId> find(const std::string& name) const;

  const std::vector<CellId>& start() const { return start_; }
  const std::vector<CellId>& accept() const { return accept_; }
  bool is_start(CellId c) const;
  bool is_accept(CellId c) const;

  CellId face(CellId c, FaceKind kind, std::size_t pos) const;

  struct Coface {
    CellId cell;
    std::size_t pos;
  };
  /// Cells y with δ^ν_pos(y) = c.
  const std::vector<Coface>& cofaces(CellId c, FaceKind kind) const;

  /// Cells whose loset equals u.
  std::vector<CellId> cells_of(const Loset& u) const;

  std::size_t count_of_dim(std::size_t d) const;

 private:
  std::string name_;
  std::vector<Cell> cells_;
  std::map<std::string, CellId> by_name_;
  std::vector<CellId> start_;
  std::vector<CellId> accept_;
  std::vector<std::vector<Coface>> lower_cofaces_;
  std::vector<std::vector<Coface>> upper_cofaces_;
};

struct ValidationIssue {
  enum class Kind { missing_face, face_typing, identity };
  Kind kind;
  CellId cell = kNoCell;
  std::size_t pos_i = 0;
  std::size_t pos_j = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Face typing and all precubical identities δ^ν_i δ^μ_j = δ^μ_{j−1} δ^ν_i, i < j.
ValidationReport validate(const Hda& x);
/// Throws FaceTypingError or IdentityViolation for the first issue.
void check_valid(const Hda& x);

/// δ^ν_A(c). Singletons are applied from the highest position down.
/// Throws std::out_of_range if A is not a set of positions of c.
CellId composite_face(const Hda& x, CellId c, FaceKind kind, EventSet positions);

/// One step of a path. Positions always refer to the loset of the higher
/// cell: for an upstep the cell entered, for a downstep the cell left.
struct PathStep {
  bool up = true;
  EventSet positions = 0;
  CellId cell = kNoCell;  // cell reached

  friend bool operator==(const PathStep&, const PathStep&) = default;
  friend auto operator<=>(const PathStep&, const PathStep&) = default;
};

struct Path {
  CellId start = kNoCell;
  std::vector<PathStep> steps;

  CellId end() const { return steps.empty() ? start : steps.back().cell; }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

bool is_valid_path(const Hda& x, const Path& p);
bool is_accepting(const Hda& x, const Path& p);

/// Glue of the starters and terminators along the path.
Ipomset ev_of_path(const Hda& x, const Path& p);

/// Merges adjacent upsteps and adjacent downsteps, drops empty steps.
Path sparse_normalize(const Hda& x, const Path& p);
bool is_sparse(const Path& p);

/// "v ↗ab q ↘a h", labels taken from the higher cell.
std::string format_path(const Hda& x, const Path& p, bool ascii = false);

struct EssentialReport {
  std::vector<CellId> accessible;
  std::vector<CellId> coaccessible;
  std::vector<CellId> essential;
  /// δ⁰_A δ¹_B of essential cells.
  std::vector<CellId> closure;
};

EssentialReport essential_report(const Hda& x);
/// The sub-HDA on essential_report(x).closure, cell names kept.
Hda ess_closure(const Hda& x);

/// A sparse accepting path with ev = P, or nullopt.
std::optional<Path> member(const Hda& x, const Ipomset& p);

/// Sparse accepting paths with at most max_steps steps, sorted.
std::vector<Path> enumerate_sparse_paths(const Hda& x, std::size_t max_steps);
/// ev of every sparse accepting path with at most max_steps steps.
std::vector<Ipomset> enumerate_language(const Hda& x, std::size_t max_steps);

struct DeterminismVerdict {
  bool deterministic = true;
  /// Condition 1 failure: two start cells on the same loset.
  std::optional<std::pair<CellId, CellId>> start_witness;
  /// Condition 2 failure: essential y ≠ z on the same loset with
  /// δ⁰_A(y) = δ⁰_A(z) = x essential.
  struct Branch {
    CellId x;
    EventSet positions;  // A, positions of the loset of y and z
    CellId y;
    CellId z;
  };
  std::optional<Branch> branch_witness;
};

DeterminismVerdict is_deterministic(const Hda& x);

}  // namespace hdakit
