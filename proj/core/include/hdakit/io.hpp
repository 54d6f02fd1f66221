#pragma once

#include <string>
#include <string_view>

#include "hdakit/hda.hpp"
#include "hdakit/language.hpp"

namespace hdakit {

/// Reads `hda NAME { cell ID : [labels] d0(i)=ID d1(i)=ID ... ; start: IDs ; accept: IDs ; }`.
/// Positions are 1-based. Unless `validate_faces` is false the result is
/// validated. Throws ParseError, FaceTypingError, IdentityViolation.
Hda parse_hda(std::string_view text, bool validate_faces = true);
std::string to_hda_text(const Hda& x);

struct DotOptions {
  /// Cells to draw bold; typically the essential ones.
  std::vector<CellId> highlight;
};

/// Vertices and edges as graph nodes and arcs. Every 2-cell becomes a shaded
/// cluster `cluster_<name>` with a box node and a comment naming its faces.
std::string to_dot(const Hda& x, const DotOptions& opts = {});

/// `.lang` file:
///
///   alphabet: a b c
///   closed: false
///   members:
///     [a|b]
///     ipomset P { events: x:a, y:b; prec: x<y }
///
/// Members are shorthand expressions (one per line) or blocks. With
/// `closed: false` the members are generators and get down-closed;
/// `closed: true` requires them to already be closed (NotDownClosed).
LanguageSet parse_lang(std::string_view text);
std::string to_lang_text(const LanguageSet& l);

/// Reads a whole file. Throws Error on I/O failure.
std::string read_file(const std::string& path);

}  // namespace hdakit
