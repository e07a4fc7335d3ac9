#pragma once

#include "relcomp/lattice.hpp"

namespace relcomp::fixtures {

/*
 * The bundled example lattices. Cover lists match the .lat files shipped
 * under fixtures/ one to one; the regression suite asserts both stay in
 * sync.
 */

/// 10-element complemented, non-modular lattice (fig1).
Lattice fig1();
/// 16-element lattice of linear subspaces of GF(2)^3 (fig2); modular and
/// complemented, atoms and coatoms in Fano-plane incidence.
Lattice fig2();
/// 10 elements, the product of the two-element lattice with M3 (fig4).
Lattice fig4();
/// 11 elements: fig4 plus one extra atom of the upper cell (fig5);
/// relatively complemented but not modular.
Lattice fig5();
/// 9-element pattern whose marked complements d, e of c induce the same
/// element of [a,b] from below. Interior elements m, n carry no labels of
/// their own and are named here for reference.
Lattice fig6_pattern();
/// Dual 9-element pattern; the shared induced element arrives from above.
Lattice fig7_pattern();
/// 5-element pentagon.
Lattice n5();

}  // namespace relcomp::fixtures
