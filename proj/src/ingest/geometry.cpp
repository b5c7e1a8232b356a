#include "qre/ingest/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qre/core/error.hpp"
#include "qre/core/format.hpp"

namespace qre::ingest {

namespace {

constexpr std::array<std::string_view, 30> kElements = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne",
    "Na", "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca",
    "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn"};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Returns true and fills `atom` when `line` is a well-formed atom row.
bool try_atom_row(std::string_view line, Atom& atom) {
  const auto fields = split_ws(line);
  if (fields.size() != 4 || atomic_number(fields[0]) == 0) return false;
  for (int k = 0; k < 3; ++k) {
    const auto v = parse_double(fields[k + 1]);
    if (!v) return false;
    atom.position[k] = *v;
  }
  atom.element = normalize_element(fields[0]);
  return true;
}

Atom parse_atom_row(std::string_view line, std::size_t line_no) {
  const auto fields = split_ws(line);
  if (fields.size() != 4) {
    throw ParseError(ErrorCategory::parse, line_no,
                     "expected 'symbol x y z', got " +
                         std::to_string(fields.size()) + " fields");
  }
  Atom atom;
  atom.element = normalize_element(fields[0], line_no);
  for (int k = 0; k < 3; ++k) {
    const auto v = parse_double(fields[k + 1]);
    if (!v) {
      throw ParseError(ErrorCategory::parse, line_no,
                       "non-numeric coordinate '" + std::string(fields[k + 1]) +
                           "'");
    }
    atom.position[k] = *v;
  }
  return atom;
}

}  // namespace

int atomic_number(std::string_view symbol) {
  if (symbol.empty() || symbol.size() > 2) return 0;
  std::string canon(symbol);
  canon[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(canon[0])));
  if (canon.size() == 2)
    canon[1] = static_cast<char>(std::tolower(static_cast<unsigned char>(canon[1])));
  const auto it = std::find(kElements.begin(), kElements.end(), canon);
  if (it == kElements.end()) return 0;
  return static_cast<int>(it - kElements.begin()) + 1;
}

std::string normalize_element(std::string_view symbol, std::size_t line) {
  const int z = atomic_number(symbol);
  if (z == 0) {
    throw ParseError(ErrorCategory::parse, line,
                     "unknown element symbol '" + std::string(symbol) + "'");
  }
  return std::string(kElements[z - 1]);
}

Geometry parse_xyz(std::string_view text) {
  const auto lines = split_lines(text);
  Geometry geometry;

  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
  };

  skip_blank();
  std::optional<long long> declared;
  if (i < lines.size()) {
    const auto fields = split_ws(lines[i]);
    if (fields.size() == 1) {
      if (auto count = parse_integer(fields[0])) {
        if (*count < 0)
          throw ParseError(ErrorCategory::parse, i + 1, "negative atom count");
        declared = count;
        ++i;
        // The line after the count is the comment unless it is an atom row.
        if (i < lines.size()) {
          Atom probe;
          if (!try_atom_row(lines[i], probe)) {
            geometry.label = std::string(trim(lines[i]));
            ++i;
          }
        }
      }
    }
  }

  for (; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    geometry.atoms.push_back(parse_atom_row(lines[i], i + 1));
  }

  if (geometry.atoms.empty()) {
    throw ParseError(ErrorCategory::empty_input, 0, "no atom rows in XYZ input");
  }
  if (declared && static_cast<std::size_t>(*declared) != geometry.atoms.size()) {
    throw ParseError(ErrorCategory::parse, 1,
                     "atom count " + std::to_string(*declared) +
                         " does not match " +
                         std::to_string(geometry.atoms.size()) + " rows");
  }
  return geometry;
}

std::string serialize_xyz(const Geometry& geometry) {
  std::ostringstream out;
  out << geometry.atoms.size() << '\n' << geometry.label << '\n';
  for (const auto& atom : geometry.atoms) {
    out << atom.element;
    for (double x : atom.position) out << ' ' << format_double(x);
    out << '\n';
  }
  return out.str();
}

Geometry read_xyz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::io, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_xyz(buffer.str());
}

}  // namespace qre::ingest
