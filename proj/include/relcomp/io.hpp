#pragma once

#include <string>
#include <string_view>

#include "relcomp/lattice.hpp"

namespace relcomp {

/*
 * Lattice file format, line oriented UTF-8:
 *
 *   # comment to end of line
 *   lattice <name>          optional, at most once
 *   elem <name> ...         one or more names per line
 *   cover <lower> <upper>
 *
 * Tokens are whitespace separated; element names are any token without
 * whitespace or '#'. Parse and print round-trip to an identical lattice.
 */
Lattice parse_lattice(std::string_view text);
Lattice load_lattice_file(const std::string& path);

/// Canonical text form: name line (when named), one elem line in table
/// order, cover lines sorted by (lower, upper).
std::string print_lattice(const Lattice& lattice);

/// Hasse diagram as a DOT digraph: rankdir=BT, one node per element, one
/// edge per cover, lower -> upper.
std::string to_dot(const Lattice& lattice);

/// "{a, c}": members sorted lexicographically by element name.
std::string format_set(const Lattice& lattice, const ElementSet& s);

}  // namespace relcomp
