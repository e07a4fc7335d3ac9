#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "relcomp/closure.hpp"
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

std::vector<ElementSet> all_subsets(const Interval& iv) {
  const auto& m = iv.member_list();
  std::vector<ElementSet> out;
  out.reserve(std::size_t{1} << m.size());
  for (std::uint32_t mask = 0; mask < (1u << m.size()); ++mask) {
    ElementSet s(iv.lattice());
    for (std::size_t i = 0; i < m.size(); ++i)
      if ((mask >> i) & 1) s.insert(m[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("closure values on the fixtures") {
  Lattice fig5 = fixtures::fig5();
  Interval e1(fig5, fig5.require("e"), fig5.require("1"));
  CHECK(closure(e1, fig5.singleton(fig5.require("h"))) == fig5.singleton(fig5.require("h")));
  CHECK(rel_complements_of_set(e1, set_of(fig5, {"f", "g", "i"})) ==
        fig5.singleton(fig5.require("h")));

  Lattice fig1 = fixtures::fig1();
  Interval whole(fig1, fig1.bottom(), fig1.top());
  CHECK(closure(whole, ElementSet(fig1)).empty());

  Lattice fig2 = fixtures::fig2();
  Interval h0(fig2, fig2.require("0"), fig2.require("h"));
  CHECK(closure(h0, fig2.singleton(fig2.require("a"))) == fig2.singleton(fig2.require("a")));
}

TEST_CASE("Galois connection laws on every complemented interval") {
  std::vector<Lattice> lattices;
  for (unsigned n = 1; n <= 5; ++n)
    for (Lattice& l : enumerate_lattices(n)) lattices.push_back(std::move(l));
  lattices.push_back(fixtures::fig5());

  for (const Lattice& l : lattices)
    for (auto [a, b] : comparable_pairs(l)) {
      if (a == b) continue;
      Interval iv(l, a, b);
      if (iv.size() > 6 || !is_complemented(iv)) continue;
      auto subsets = all_subsets(iv);
      for (const ElementSet& s : subsets) {
        CHECK(s.subset_of(closure(iv, s)));
        CHECK(rel_complements_of_set(iv, closure(iv, s)) == rel_complements_of_set(iv, s));
        if (!s.empty()) CHECK_FALSE(closure(iv, s).empty());
      }
      for (const ElementSet& s : subsets)
        for (const ElementSet& t : subsets) {
          if (s.subset_of(t))
            CHECK(rel_complements_of_set(iv, t).subset_of(rel_complements_of_set(iv, s)));
          CHECK(s.subset_of(rel_complements_of_set(iv, t)) ==
                t.subset_of(rel_complements_of_set(iv, s)));
        }
    }
}

TEST_CASE("closed family of M3 has exactly the ten known members") {
  Lattice m3 = make_mn(3);
  Interval whole(m3, m3.bottom(), m3.top());
  ClosedFamily fam = closed_family(whole);
  REQUIRE(fam.size() == 10);

  std::vector<ElementSet> expect;
  expect.push_back(ElementSet(m3));
  expect.push_back(m3.singleton(m3.require("0")));
  expect.push_back(m3.singleton(m3.require("a1")));
  expect.push_back(m3.singleton(m3.require("a2")));
  expect.push_back(m3.singleton(m3.require("a3")));
  expect.push_back(m3.singleton(m3.require("1")));
  expect.push_back(set_of(m3, {"a1", "a2"}));
  expect.push_back(set_of(m3, {"a1", "a3"}));
  expect.push_back(set_of(m3, {"a2", "a3"}));
  expect.push_back(m3.full_set());
  for (const ElementSet& e : expect) CHECK(fam.index_of(e).has_value());

  // ordering: cardinality first, empty set at the bottom, full set on top
  CHECK(fam.at(fam.bottom_index()).empty());
  CHECK(fam.at(fam.top_index()) == whole.members());
  for (std::size_t i = 0; i + 1 < fam.size(); ++i)
    CHECK(fam.at(i).size() <= fam.at(i + 1).size());
}

TEST_CASE("closed family of the Boolean square") {
  Lattice b2 = make_boolean(2);
  Interval whole(b2, b2.bottom(), b2.top());
  ClosedFamily fam = closed_family(whole);
  CHECK(fam.size() == 6);
  ElementId x = b2.require("1"), xc = b2.require("2");
  auto ix = fam.index_of(b2.singleton(x));
  REQUIRE(ix.has_value());
  CHECK(fam.at(fam.ortho(*ix)) == b2.singleton(xc));
}

TEST_CASE("closed family equals the full-subset oracle") {
  struct Case {
    Lattice l;
    const char* a;
    const char* b;
  };
  std::vector<Case> cases;
  cases.push_back({fixtures::fig1(), "0", "1"});
  cases.push_back({fixtures::fig5(), "e", "1"});
  cases.push_back({fixtures::fig5(), "0", "d"});
  cases.push_back({make_mn(4), "0", "1"});
  for (const Case& c : cases) {
    Interval iv(c.l, c.l.require(c.a), c.l.require(c.b));
    ClosedFamily fam = closed_family(iv);
    auto brute = oracle::closed_family_brute(iv);
    REQUIRE(fam.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(fam.at(i) == brute[i]);
  }
}

TEST_CASE("orthocomplementation maps the bounds to each other") {
  Lattice fig5 = fixtures::fig5();
  Interval e1(fig5, fig5.require("e"), fig5.require("1"));
  ClosedFamily fam = closed_family(e1);
  CHECK(fam.ortho(fam.bottom_index()) == fam.top_index());
  CHECK(fam.ortho(fam.top_index()) == fam.bottom_index());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CHECK(fam.ortho(fam.ortho(i)) == i);
    CHECK_FALSE(fam.at(i).intersects(fam.at(fam.ortho(i))));
    CHECK(fam.join(i, fam.ortho(i)) == fam.top_index());
    CHECK(fam.meet(i, fam.ortho(i)) == fam.bottom_index());
  }
}

TEST_CASE("degenerate intervals are refused") {
  Lattice m3 = make_mn(3);
  Interval point(m3, m3.require("a1"), m3.require("a1"));
  CHECK_THROWS_AS(closed_family(point), DegenerateInterval);
  // closure itself still works there
  CHECK(closure(point, m3.singleton(m3.require("a1"))) == m3.singleton(m3.require("a1")));
}

TEST_CASE("le1 and eq1") {
  Lattice m3 = make_mn(3);
  ElementSet empty(m3);
  CHECK(le1(empty, m3.full_set()));
  CHECK(le1(empty, empty));
  CHECK(le1(m3.singleton(m3.require("a1")), m3.singleton(m3.require("1"))));
  CHECK_FALSE(le1(m3.singleton(m3.require("1")), m3.singleton(m3.require("a1"))));
  CHECK(eq1(set_of(m3, {"a1", "a2"}), set_of(m3, {"a2", "a1"})));

  Lattice fig5 = fixtures::fig5();
  CHECK_THROWS_AS(le1(ElementSet(m3), ElementSet(fig5)), UniverseMismatch);

  // A in B implies A <=1 B; reflexive and transitive on sampled triples
  std::uint64_t state = 12345;
  auto rng = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  for (int round = 0; round < 200; ++round) {
    ElementSet a(fig5), b(fig5), c(fig5);
    for (ElementId x = 0; x < fig5.size(); ++x) {
      if (rng() & 1) a.insert(x);
      if (rng() & 1) b.insert(x);
      if (rng() & 1) c.insert(x);
    }
    CHECK(le1(a, a));
    CHECK(le1(a, a | b));
    if (le1(a, b) && le1(b, c)) CHECK(le1(a, c));
  }
}
