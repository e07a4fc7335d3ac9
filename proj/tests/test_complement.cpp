#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "relcomp/complement.hpp"
#include "relcomp/enumerate.hpp"
#include "relcomp/fixtures.hpp"
#include "relcomp/io.hpp"

using namespace relcomp;

namespace {

ElementSet set_of(const Lattice& l, std::initializer_list<const char*> names) {
  ElementSet s(l);
  for (const char* n : names) s.insert(l.require(n));
  return s;
}

}  // namespace

TEST_CASE("complement operator values on fig1 and fig5") {
  Lattice fig1 = fixtures::fig1();
  CHECK(format_set(fig1, complements(fig1, fig1.require("g"))) == "{a, c}");
  CHECK(format_set(fig1, complements(fig1, fig1.require("f"))) == "{b}");
  CHECK(format_set(fig1, complements(fig1, fig1.require("b"))) == "{f, h}");
  CHECK(complements(fig1, fig1.bottom()) == fig1.singleton(fig1.top()));

  Lattice fig5 = fixtures::fig5();
  CHECK(format_set(fig5, complements(fig5, fig5.require("i"))) == "{a, b, c, d}");
  CHECK(format_set(fig5, complements(fig5, fig5.require("h"))) == "{a, b}");
}

TEST_CASE("complements agree with the definition scan everywhere") {
  std::vector<Lattice> lattices;
  lattices.push_back(fixtures::fig1());
  lattices.push_back(fixtures::fig5());
  for (unsigned n = 1; n <= 5; ++n)
    for (Lattice& l : enumerate_lattices(n)) lattices.push_back(std::move(l));
  for (const Lattice& l : lattices)
    for (ElementId x = 0; x < l.size(); ++x)
      CHECK(complements(l, x) == oracle::complements_brute(l, x));
}

TEST_CASE("complements of sets") {
  Lattice fig1 = fixtures::fig1();
  // intersection of the member complements, here computed by brute force
  ElementSet ac = set_of(fig1, {"a", "c"});
  ElementSet expected = oracle::complements_brute(fig1, fig1.require("a")) &
                        oracle::complements_brute(fig1, fig1.require("c"));
  CHECK(complements_of_set(fig1, ac) == expected);
  CHECK(format_set(fig1, complements_of_set(fig1, ac)) == "{g}");

  CHECK(complements_of_set(fig1, ElementSet(fig1)) == fig1.full_set());
  CHECK(complements_of_set(fig1, set_of(fig1, {"0", "1"})).empty());
}

TEST_CASE("relative complements") {
  Lattice fig1 = fixtures::fig1();
  Interval ah(fig1, fig1.require("a"), fig1.require("h"));
  CHECK(format_set(fig1, rel_complements(ah, fig1.require("f"))) == "{c}");

  Interval eh(fig1, fig1.require("e"), fig1.require("h"));
  CHECK(rel_complements(eh, fig1.require("f")).empty());

  Lattice fig5 = fixtures::fig5();
  Interval e1(fig5, fig5.require("e"), fig5.require("1"));
  CHECK(format_set(fig5, rel_complements(e1, fig5.require("h"))) == "{f, g, i}");
  CHECK(format_set(fig5, rel_complements(e1, fig5.require("i"))) == "{f, g, h}");

  // the lower bound's only relative complement is the upper bound
  for (auto [a, b] : comparable_pairs(fig5)) {
    Interval iv(fig5, a, b);
    CHECK(rel_complements(iv, a) == fig5.singleton(b));
  }

  CHECK_THROWS_AS(rel_complements(e1, fig5.require("a")), OutsideInterval);
}

TEST_CASE("relative complements agree with the double-loop oracle") {
  std::vector<Lattice> lattices;
  lattices.push_back(fixtures::fig1());
  lattices.push_back(fixtures::fig5());
  for (unsigned n = 1; n <= 6; ++n)
    for (Lattice& l : enumerate_lattices(n)) lattices.push_back(std::move(l));
  for (const Lattice& l : lattices)
    for (auto [a, b] : comparable_pairs(l)) {
      Interval iv(l, a, b);
      for (ElementId x : iv.member_list())
        CHECK(rel_complements(iv, x) == oracle::rel_complements_brute(l, a, b, x));
    }
}

TEST_CASE("relative complements of sets") {
  Lattice fig5 = fixtures::fig5();
  Interval e1(fig5, fig5.require("e"), fig5.require("1"));
  CHECK(rel_complements_of_set(e1, ElementSet(fig5)) == e1.members());
  CHECK(rel_complements_of_set(e1, set_of(fig5, {"h", "i"})) ==
        (rel_complements(e1, fig5.require("h")) & rel_complements(e1, fig5.require("i"))));
  CHECK_THROWS_AS(rel_complements_of_set(e1, set_of(fig5, {"a"})), OutsideInterval);
}

TEST_CASE("bar and hat") {
  Lattice fig5 = fixtures::fig5();
  Interval e1(fig5, fig5.require("e"), fig5.require("1"));
  CHECK(format_set(fig5, bar(e1, fig5.require("h"))) == "{f, g}");
  CHECK(format_set(fig5, hat(e1, fig5.require("h"))) == "{f, g}");
  CHECK(format_set(fig5, bar(e1, fig5.require("i"))) == "{1, f, g, h}");
  CHECK(format_set(fig5, hat(e1, fig5.require("i"))) == "{1, f, g, h}");
  // 1 is in the bar image but is not a relative complement of i
  CHECK_FALSE(rel_complements(e1, fig5.require("i")).contains(fig5.require("1")));

  Lattice fig2 = fixtures::fig2();
  Interval h0(fig2, fig2.require("0"), fig2.require("h"));
  CHECK(format_set(fig2, bar(h0, fig2.require("a"))) == "{b, c}");
  CHECK(bar(h0, fig2.require("a")) == rel_complements(h0, fig2.require("a")));
  CHECK(bar(h0, fig2.require("a")) == hat(h0, fig2.require("a")));

  // an element without complements has empty bar and hat images
  Lattice c3 = make_chain(3);
  Interval whole(c3, c3.bottom(), c3.top());
  CHECK(complements(c3, c3.require("1")).empty());
  CHECK(bar(whole, c3.require("1")).empty());
  CHECK(hat(whole, c3.require("1")).empty());

  // bar and hat accept ambient elements outside the interval
  Lattice fig1 = fixtures::fig1();
  Interval eh(fig1, fig1.require("e"), fig1.require("h"));
  CHECK_NOTHROW(bar(eh, fig1.require("b")));
}

TEST_CASE("modular complemented lattices: bar = hat inside the relative complements") {
  for (unsigned n = 1; n <= 6; ++n)
    for (const Lattice& l : enumerate_lattices(n)) {
      if (!is_modular(l) || !is_complemented(l)) continue;
      for (auto [a, b] : comparable_pairs(l)) {
        Interval iv(l, a, b);
        for (ElementId x : iv.member_list()) {
          ElementSet below = bar(iv, x);
          CHECK(below == hat(iv, x));
          CHECK(below.subset_of(rel_complements(iv, x)));
          CHECK_FALSE(rel_complements(iv, x).empty());
        }
      }
    }
}

TEST_CASE("induced elements on fig1") {
  Lattice l = fixtures::fig1();
  auto E = [&](const char* n) { return l.require(n); };

  Interval eh(l, E("e"), E("h"));
  InducedReport r1 = check_induced(eh, E("f"), E("b"));
  CHECK(r1.cond1_holds);
  CHECK_FALSE(r1.cond2_holds);
  REQUIRE(r1.v.has_value());
  CHECK(*r1.v == E("e"));
  CHECK(r1.v_in_relcomp == false);

  Interval ah(l, E("a"), E("h"));
  InducedReport r2 = check_induced(ah, E("f"), E("b"));
  CHECK_FALSE(r2.cond1_holds);
  CHECK_FALSE(r2.v.has_value());
  CHECK_FALSE(r2.v_in_relcomp.has_value());

  Interval b1(l, E("b"), E("1"));
  InducedReport r3 = check_induced(b1, E("g"), E("a"));
  CHECK(r3.cond1_holds);
  CHECK(r3.cond2_holds);
  CHECK(r3.v == E("d"));
  CHECK(r3.v_in_relcomp == true);

  CHECK_THROWS_AS(check_induced(eh, E("b"), E("a")), OutsideInterval);
}

TEST_CASE("induced equivalence holds for every interval, member and ambient element") {
  for (unsigned n = 1; n <= 5; ++n)
    for (const Lattice& l : enumerate_lattices(n))
      for (auto [a, b] : comparable_pairs(l)) {
        Interval iv(l, a, b);
        for (ElementId z : iv.member_list())
          for (ElementId u = 0; u < l.size(); ++u) {
            InducedReport rep = check_induced(iv, z, u);
            if (rep.cond1_holds) {
              REQUIRE(rep.v.has_value());
              CHECK(*rep.v_in_relcomp == rep.cond2_holds);
              CHECK(iv.contains(*rep.v));
            } else {
              CHECK_FALSE(rep.v.has_value());
            }
          }
      }
}

TEST_CASE("cond1 is automatic in modular lattices") {
  std::vector<Lattice> lattices;
  for (unsigned n = 1; n <= 6; ++n)
    for (Lattice& l : enumerate_lattices(n))
      if (is_modular(l)) lattices.push_back(std::move(l));
  lattices.push_back(fixtures::fig2());
  for (const Lattice& l : lattices)
    for (auto [a, b] : comparable_pairs(l))
      for (ElementId u = 0; u < l.size(); ++u)
        CHECK(l.meet(l.join(u, a), b) == l.join(l.meet(u, b), a));
}
