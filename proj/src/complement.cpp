#include "relcomp/complement.hpp"

#include <stdexcept>

namespace relcomp {

ElementSet complements(const Lattice& l, ElementId x) {
  ElementSet r(l);
  for (ElementId y = 0; y < l.size(); ++y)
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) r.insert(y);
  return r;
}

ElementSet complements_of_set(const Lattice& l, const ElementSet& a) {
  if (a.universe() != &l) throw UniverseMismatch("set belongs to another lattice");
  ElementSet r(l);
  for (ElementId y = 0; y < l.size(); ++y) {
    bool all = true;
    a.for_each([&](ElementId x) {
      if (l.join(x, y) != l.top() || l.meet(x, y) != l.bottom()) all = false;
    });
    if (all) r.insert(y);
  }
  return r;
}

ElementSet rel_complements(const Interval& iv, ElementId x) {
  if (!iv.contains(x))
    throw OutsideInterval("'" + iv.lattice().element_name(x) + "' lies outside the interval");
  const Lattice& l = iv.lattice();
  ElementSet r(l);
  for (ElementId y : iv.member_list())
    if (l.join(x, y) == iv.upper() && l.meet(x, y) == iv.lower()) r.insert(y);
  return r;
}

ElementSet rel_complements_of_set(const Interval& iv, const ElementSet& a) {
  if (a.universe() != &iv.lattice()) throw UniverseMismatch("set belongs to another lattice");
  if (!a.subset_of(iv.members()))
    throw OutsideInterval("subset reaches outside the interval");
  const Lattice& l = iv.lattice();
  ElementSet r(l);
  for (ElementId y : iv.member_list()) {
    bool all = true;
    a.for_each([&](ElementId x) {
      if (l.join(x, y) != iv.upper() || l.meet(x, y) != iv.lower()) all = false;
    });
    if (all) r.insert(y);
  }
  return r;
}

ElementSet bar(const Interval& iv, ElementId x) {
  return meet_set(join_set(complements(iv.lattice(), x), iv.lower()), iv.upper());
}

ElementSet hat(const Interval& iv, ElementId x) {
  return join_set(meet_set(complements(iv.lattice(), x), iv.upper()), iv.lower());
}

InducedReport check_induced(const Interval& iv, ElementId z, ElementId u) {
  if (!iv.contains(z))
    throw OutsideInterval("'" + iv.lattice().element_name(z) + "' lies outside the interval");
  const Lattice& l = iv.lattice();
  ElementId x = iv.lower(), y = iv.upper();

  InducedReport rep;
  rep.u = u;
  rep.z = z;
  rep.lower = x;
  rep.upper = y;

  ElementId from_below = l.meet(l.join(u, x), y);  // (u v x) ^ y
  ElementId from_above = l.join(l.meet(u, y), x);  // (u ^ y) v x
  rep.cond1_holds = from_below == from_above;
  rep.cond2_holds = l.meet(l.join(u, x), z) == x && l.join(l.meet(u, y), z) == y;

  if (rep.cond1_holds) {
    rep.v = from_below;
    bool member = l.join(z, from_below) == y && l.meet(z, from_below) == x;
    rep.v_in_relcomp = member;
    if (member != rep.cond2_holds)
      throw std::logic_error("induced-element equivalence violated (internal consistency)");
  }
  return rep;
}

}  // namespace relcomp
