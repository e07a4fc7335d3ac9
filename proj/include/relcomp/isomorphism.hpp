#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relcomp/lattice.hpp"

namespace relcomp {

/*
 * Canonical forms and isomorphism tests for small lattices.
 *
 * canonical_order_key works on a raw reflexive order relation given as one
 * down-set bitmask per element (n <= 16): vertices are first partitioned by
 * iterated refinement of (down-set size, up-set size, neighbour colour
 * multisets), then all colour-respecting permutations are tried and the
 * lexicographically least relation matrix is returned. Two orders get the
 * same key iff they are isomorphic.
 */
std::string canonical_order_key(unsigned n, const std::vector<std::uint16_t>& down);

/// Canonical key of the lattice's order (size <= 16).
std::string canonical_key(const Lattice& lattice);

/// Order isomorphism via invariant refinement plus backtracking; works for
/// any size and is exact. Finite lattices are isomorphic iff their orders are.
bool is_isomorphic(const Lattice& a, const Lattice& b);

}  // namespace relcomp
