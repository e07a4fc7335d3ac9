#pragma once

#include <optional>

#include "relcomp/lattice.hpp"

namespace relcomp {

/// All complements of x: { y | x v y = top and x ^ y = bottom }.
ElementSet complements(const Lattice& lattice, ElementId x);

/// Common complements of every member of A. A = {} yields the whole lattice.
ElementSet complements_of_set(const Lattice& lattice, const ElementSet& a);

/// All relative complements of x in the interval:
/// { y in [a,b] | x v y = b and x ^ y = a }. x must be a member.
ElementSet rel_complements(const Interval& iv, ElementId x);

/// Common relative complements of every member of A (subset of the
/// interval). A = {} yields the full member set.
ElementSet rel_complements_of_set(const Interval& iv, const ElementSet& a);

/// (x+ v a) ^ b: the candidate relative complements obtained by pushing the
/// global complements of x into [a,b] from below. Defined for every x of
/// the lattice; an element without complements yields the empty set.
ElementSet bar(const Interval& iv, ElementId x);

/// (x+ ^ b) v a: the dual candidate set, pushed in from above.
ElementSet hat(const Interval& iv, ElementId x);

/// Outcome of the induced-element test for z in [x,y] and an ambient u.
/// cond1:  (u v x) ^ y = (u ^ y) v x
/// cond2:  (u v x) ^ z = x  and  (u ^ y) v z = y
/// When cond1 holds, v = (u v x) ^ y is the induced element and membership
/// v in z^{xy} is equivalent to cond2; that equivalence is re-checked at
/// construction and a mismatch raises an internal-consistency error.
struct InducedReport {
  ElementId u = kNone;
  ElementId z = kNone;
  ElementId lower = kNone;  // x
  ElementId upper = kNone;  // y
  bool cond1_holds = false;
  bool cond2_holds = false;
  std::optional<ElementId> v;          // present iff cond1 holds
  std::optional<bool> v_in_relcomp;    // present iff cond1 holds
};

InducedReport check_induced(const Interval& iv, ElementId z, ElementId u);

}  // namespace relcomp
