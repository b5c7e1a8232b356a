#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace qre::ingest {

/// One atom; `element` is a case-normalised symbol from H through Zn and
/// `position` is in Angstrom.
struct Atom {
  std::string element;
  std::array<double, 3> position{};

  bool operator==(const Atom&) const = default;
};

struct Geometry {
  std::string label;
  std::vector<Atom> atoms;

  bool operator==(const Geometry&) const = default;
};

/// Atomic number (1..30) for a symbol, or 0 when unknown. Case-insensitive.
int atomic_number(std::string_view symbol);

/// Canonical capitalisation ("CU" -> "Cu"); throws ParseError if unknown.
std::string normalize_element(std::string_view symbol, std::size_t line = 0);

/**
 * Parses XYZ text: an optional atom-count line, an optional comment line
 * (only recognised directly after the count), then `Sym x y z` rows.
 * Blank lines are ignored. The comment, when present, becomes the label.
 *
 * Errors: empty_input when there are no atom rows, parse (with the line
 * number) for an unknown element, a non-numeric coordinate, a malformed row
 * or a count that disagrees with the number of rows.
 */
Geometry parse_xyz(std::string_view text);

/// Count line, label line, then one row per atom using shortest round-trip
/// decimals. parse_xyz(serialize_xyz(g)) == g.
std::string serialize_xyz(const Geometry& geometry);

Geometry read_xyz_file(const std::string& path);

}  // namespace qre::ingest
