#include "relcomp/regress.hpp"

#include "relcomp/closure.hpp"
#include "relcomp/complement.hpp"
#include "relcomp/fixtures.hpp"
#include "relcomp/io.hpp"
#include "relcomp/isomorphism.hpp"
#include "relcomp/verify.hpp"

namespace relcomp {

namespace {

struct Runner {
  std::vector<RegressEntry> entries;

  void expect_set(const Lattice& l, std::string id, std::string description,
                  const ElementSet& actual, const std::string& expected) {
    std::string got = format_set(l, actual);
    entries.push_back({std::move(id), std::move(description), got == expected,
                       got == expected ? "" : "got " + got + ", expected " + expected});
  }

  void expect(std::string id, std::string description, bool ok, std::string detail = "") {
    entries.push_back({std::move(id), std::move(description), ok,
                       ok ? "" : (detail.empty() ? "failed" : detail)});
  }
};

ElementSet set_of(const Lattice& l, std::initializer_list<const char*> names) {
  ElementSet s(l);
  for (const char* n : names) s.insert(l.require(n));
  return s;
}

// every interval: bar = hat = z^{xy} and ({z}^{xy})^{xy} = {z}
bool identity_and_induced_everywhere(const Lattice& l, bool check_bar_hat) {
  for (auto [x, y] : comparable_pairs(l)) {
    Interval iv(l, x, y);
    for (ElementId z : iv.member_list()) {
      if (closure(iv, l.singleton(z)) != l.singleton(z)) return false;
      if (check_bar_hat) {
        ElementSet rc = rel_complements(iv, z);
        if (bar(iv, z) != rc || hat(iv, z) != rc) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<RegressEntry> run_paper_regress() {
  Runner r;

  // ---- fig1 -----------------------------------------------------------------
  {
    Lattice l = fixtures::fig1();
    auto E = [&](const char* n) { return l.require(n); };

    r.expect_set(l, "fig1.comp_g", "g+ = {a, c}", complements(l, E("g")), "{a, c}");

    Interval b1(l, E("b"), E("1"));
    for (const char* u : {"a", "c"}) {
      InducedReport rep = check_induced(b1, E("g"), E(u));
      r.expect("fig1.induced_g_" + std::string(u),
               std::string("u=") + u + " induces d in g^{b1}",
               rep.cond1_holds && rep.cond2_holds && rep.v == E("d") &&
                   rep.v_in_relcomp == true);
    }

    r.expect_set(l, "fig1.comp_f", "f+ = {b}", complements(l, E("f")), "{b}");

    Interval eh(l, E("e"), E("h"));
    InducedReport feh = check_induced(eh, E("f"), E("b"));
    r.expect("fig1.induced_f_eh", "u=b on [e,h]: cond1 holds, cond2 fails, e not in f^{eh}",
             feh.cond1_holds && !feh.cond2_holds && feh.v == E("e") &&
                 feh.v_in_relcomp == false);

    Interval e1(l, E("e"), E("1"));
    InducedReport fe1 = check_induced(e1, E("f"), E("b"));
    r.expect("fig1.induced_f_e1", "u=b on [e,1]: g lands in f^{e1}",
             fe1.cond1_holds && fe1.cond2_holds && fe1.v == E("g") &&
                 fe1.v_in_relcomp == true);

    r.expect_set(l, "fig1.comp_b", "b+ = {f, h}", complements(l, E("b")), "{f, h}");

    Interval d0(l, E("0"), E("d"));
    InducedReport b0d_f = check_induced(d0, E("b"), E("f"));
    InducedReport b0d_h = check_induced(d0, E("b"), E("h"));
    r.expect("fig1.induced_b_0d", "u=f and u=h induce a and c in b^{0d}",
             b0d_f.v == E("a") && b0d_f.v_in_relcomp == true && b0d_h.v == E("c") &&
                 b0d_h.v_in_relcomp == true);
    r.expect("fig1.relcomp_b_0d", "a and c lie in b^{0d}",
             rel_complements(d0, E("b")).contains(E("a")) &&
                 rel_complements(d0, E("b")).contains(E("c")));

    Interval ah(l, E("a"), E("h"));
    InducedReport fah = check_induced(ah, E("f"), E("b"));
    r.expect("fig1.cond1_fails_ah", "cond1 fails for u=b on [a,h]", !fah.cond1_holds && !fah.v);
    r.expect_set(l, "fig1.relcomp_f_ah", "f^{ah} = {c}", rel_complements(ah, E("f")), "{c}");
  }

  // ---- fig2 -----------------------------------------------------------------
  {
    Lattice l = fixtures::fig2();
    auto E = [&](const char* n) { return l.require(n); };

    r.expect("fig2.flags", "modular and complemented", is_modular(l) && is_complemented(l));

    Interval h0(l, E("0"), E("h"));
    r.expect_set(l, "fig2.comp_a", "a+ = {k, l, m, n}", complements(l, E("a")), "{k, l, m, n}");
    r.expect_set(l, "fig2.bar_a", "bar of a over [0,h] = {b, c}", bar(h0, E("a")), "{b, c}");
    r.expect_set(l, "fig2.hat_a", "hat of a over [0,h] = {b, c}", hat(h0, E("a")), "{b, c}");
    r.expect_set(l, "fig2.relcomp_a", "a^{0h} = {b, c}", rel_complements(h0, E("a")), "{b, c}");
    r.expect_set(l, "fig2.closure_a", "(a^{0h})^{0h} = {a}",
                 closure(h0, l.singleton(E("a"))), "{a}");

    r.expect("fig2.global", "every interval: bar = hat = z^{xy} and closure is the identity",
             identity_and_induced_everywhere(l, true));
  }

  // ---- fig4 -----------------------------------------------------------------
  {
    Lattice l = fixtures::fig4();
    std::vector<Lattice> factors;
    factors.push_back(make_boolean(1));
    factors.push_back(make_mn(3));
    r.expect("fig4.product", "isomorphic to the product of B1 and M3",
             is_isomorphic(l, direct_product(factors)));
    r.expect("fig4.identity", "every interval satisfies the closure identity",
             identity_and_induced_everywhere(l, false));
    CheckReport th1 = verify_th1(factors);
    r.expect("fig4.th1", "product factor check holds",
             th1.status == CheckStatus::Verified);
  }

  // ---- fig5 -----------------------------------------------------------------
  {
    Lattice l = fixtures::fig5();
    auto E = [&](const char* n) { return l.require(n); };

    auto pentagon = find_n5_through(Interval(l, l.bottom(), l.top()));
    bool pentagon_ok = pentagon.has_value();
    if (pentagon_ok) {
      std::array<ElementId, 5> expected = {E("0"), E("d"), E("e"), E("i"), E("1")};
      pentagon_ok = *pentagon == expected;
    }
    r.expect("fig5.pentagon", "not modular, pentagon {0, d, e, i, 1}",
             !is_modular(l) && pentagon_ok);

    Interval e1(l, E("e"), E("1"));
    r.expect_set(l, "fig5.comp_h", "h+ = {a, b}", complements(l, E("h")), "{a, b}");
    r.expect_set(l, "fig5.bar_h", "bar of h over [e,1] = {f, g}", bar(e1, E("h")), "{f, g}");
    r.expect_set(l, "fig5.hat_h", "hat of h over [e,1] = {f, g}", hat(e1, E("h")), "{f, g}");
    r.expect_set(l, "fig5.relcomp_h", "h^{e1} = {f, g, i}", rel_complements(e1, E("h")),
                 "{f, g, i}");
    r.expect_set(l, "fig5.comp_i", "i+ = {a, b, c, d}", complements(l, E("i")), "{a, b, c, d}");
    r.expect_set(l, "fig5.bar_i", "bar of i over [e,1] = {1, f, g, h}", bar(e1, E("i")),
                 "{1, f, g, h}");
    r.expect_set(l, "fig5.hat_i", "hat of i over [e,1] = {1, f, g, h}", hat(e1, E("i")),
                 "{1, f, g, h}");
    r.expect_set(l, "fig5.relcomp_i", "i^{e1} = {f, g, h}", rel_complements(e1, E("i")),
                 "{f, g, h}");

    bool proper_below = bar(e1, E("h")).subset_of(rel_complements(e1, E("h"))) &&
                        bar(e1, E("h")) != rel_complements(e1, E("h"));
    bool proper_above = rel_complements(e1, E("i")).subset_of(bar(e1, E("i"))) &&
                        bar(e1, E("i")) != rel_complements(e1, E("i"));
    r.expect("fig5.strict", "bar sits strictly below h^{e1} and strictly above i^{e1}",
             proper_below && proper_above);

    r.expect_set(l, "fig5.join_set", "{a, b} v {e} = {f, g}",
                 join_set(set_of(l, {"a", "b"}), set_of(l, {"e"})), "{f, g}");
  }

  return r.entries;
}

}  // namespace relcomp
