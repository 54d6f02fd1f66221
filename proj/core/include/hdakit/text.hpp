#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdakit/ipomset.hpp"
#include "hdakit/steps.hpp"

namespace hdakit {

/// Shorthand notation.
///
///   ab•            a precedes b, b is a target event
///   [•a∥b•]        two concurrent rows; row order is the event order
///   [a|b*]         ASCII spelling of [a∥b•]
///   {send}{recv}   multi-character labels
///   ε              the empty ipomset
///
/// Each row is a precedence chain, and the bullets may only appear before
/// the first or after the last element of a row. Cross-row precedence needs
/// the block format. Throws ParseError or AxiomViolation.
Ipomset parse_shorthand(std::string_view text);

struct FormatOptions {
  bool ascii = false;
};

/// Shorthand for p, or nullopt if p is not a parallel composition of chains
/// with a consistent row order.
std::optional<std::string> to_shorthand(const Ipomset& p, FormatOptions opts = {});

/// Shorthand if possible, otherwise a one-line block.
std::string format(const Ipomset& p, FormatOptions opts = {});

std::string format(const Loset& u, FormatOptions opts = {});
/// "(ab)↑a" style, active events marked after the arrow.
std::string format(const StarterTerminator& st, FormatOptions opts = {});
std::string format(const std::vector<Ipomset>& set, FormatOptions opts = {});

struct NamedIpomset {
  std::string name;
  Ipomset value;
};

/// Reads a sequence of `ipomset NAME { ... }` blocks.
std::vector<NamedIpomset> parse_ipo(std::string_view text);

/// Parses exactly one block starting at `pos`; returns the offset just past
/// the closing brace in `end`.
NamedIpomset parse_ipo_block(std::string_view text, std::size_t pos, std::size_t* end);

/// Block format; `multiline` puts each section on its own line.
std::string to_ipo_block(const Ipomset& p, std::string_view name, bool multiline = true);

/// A block if the text starts with the `ipomset` keyword, shorthand otherwise.
Ipomset parse_ipomset_text(std::string_view text);

}  // namespace hdakit
