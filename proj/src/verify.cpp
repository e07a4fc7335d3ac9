#include "relcomp/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace relcomp {

namespace {

Witness witness_for(const Interval& iv) {
  Witness w;
  w.lattice = iv.lattice().name();
  w.interval = std::make_pair(iv.lower(), iv.upper());
  return w;
}

Witness witness_for(const Lattice& l) {
  Witness w;
  w.lattice = l.name();
  return w;
}

// splitmix64; used only to pick deterministic sample subsets
struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// All subsets when the interval is small enough, otherwise a fixed
// deterministic pool: empty, full, singletons, the x^{ab} images, the
// singleton biclosures and a handful of seeded pseudorandom subsets.
std::vector<ElementSet> subset_pool(const Interval& iv, std::size_t exhaustive_limit,
                                    bool* sampled = nullptr) {
  const auto& members = iv.member_list();
  std::size_t k = members.size();
  std::vector<ElementSet> pool;
  if (k <= exhaustive_limit) {
    if (sampled) *sampled = false;
    pool.reserve(std::size_t{1} << k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      ElementSet s(iv.lattice());
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1) s.insert(members[i]);
      pool.push_back(std::move(s));
    }
    return pool;
  }
  if (sampled) *sampled = true;
  pool.push_back(ElementSet(iv.lattice()));
  pool.push_back(iv.members());
  for (ElementId x : members) pool.push_back(iv.lattice().singleton(x));
  for (ElementId x : members) pool.push_back(rel_complements(iv, x));
  for (ElementId x : members) pool.push_back(closure(iv, iv.lattice().singleton(x)));
  SplitMix rng{0x52656C43ull ^ (static_cast<std::uint64_t>(k) << 32) ^ iv.lower() ^
               (static_cast<std::uint64_t>(iv.upper()) << 16)};
  for (int i = 0; i < 16; ++i) {
    ElementSet s(iv.lattice());
    for (std::size_t j = 0; j < k; ++j)
      if (rng.next() & 1) s.insert(members[j]);
    pool.push_back(std::move(s));
  }
  return pool;
}

// Standing hypotheses for the Galois-connection section: a < b and the
// interval complemented. Fills a vacuous report when they fail.
bool section_hypotheses(const Interval& iv, CheckReport& rep) {
  if (iv.degenerate()) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: degenerate interval";
    return false;
  }
  if (!is_complemented(iv)) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: interval not complemented";
    return false;
  }
  return true;
}

std::vector<ElementId> set_to_ids(const ElementSet& s) { return s.to_vector(); }

ElementSet ids_to_set(const Lattice& l, const std::vector<ElementId>& ids) {
  ElementSet s(l);
  for (ElementId x : ids) {
    if (x >= l.size()) throw OutsideInterval("witness element out of range");
    s.insert(x);
  }
  return s;
}

}  // namespace

void merge_report(CheckReport& aggregate, const CheckReport& one) {
  aggregate.checked += one.checked;
  if (one.status == CheckStatus::Refuted) {
    if (aggregate.status != CheckStatus::Refuted) {
      aggregate.status = CheckStatus::Refuted;
      aggregate.counterexample = one.counterexample;
      aggregate.note = one.note;
    }
    return;
  }
  if (aggregate.status == CheckStatus::Refuted) return;
  if (one.status == CheckStatus::Verified) {
    aggregate.status = CheckStatus::Verified;
    aggregate.note.clear();
  } else if (aggregate.status == CheckStatus::Vacuous && aggregate.note.empty()) {
    aggregate.note = one.note;
  }
}

CheckReport verify_galois_extensive(const Interval& iv) {
  CheckReport rep;
  rep.statement = "galois.extensive";
  if (!section_hypotheses(iv, rep)) return rep;
  bool sampled = false;
  auto pool = subset_pool(iv, 12, &sampled);
  for (const ElementSet& a : pool) {
    ++rep.checked;
    if (!a.subset_of(closure(iv, a))) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.sets.emplace_back("A", set_to_ids(a));
      w.detail = "A not contained in (A^{ab})^{ab}";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  if (sampled) rep.note = "sampled subsets";
  return rep;
}

CheckReport verify_galois_nonempty(const Interval& iv) {
  CheckReport rep;
  rep.statement = "galois.nonempty";
  if (!section_hypotheses(iv, rep)) return rep;
  bool sampled = false;
  auto pool = subset_pool(iv, 12, &sampled);
  for (const ElementSet& a : pool) {
    if (a.empty()) continue;
    ++rep.checked;
    if (closure(iv, a).empty()) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.sets.emplace_back("A", set_to_ids(a));
      w.detail = "(A^{ab})^{ab} empty for nonempty A";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  if (sampled) rep.note = "sampled subsets";
  return rep;
}

CheckReport verify_galois_antitone(const Interval& iv) {
  CheckReport rep;
  rep.statement = "galois.antitone";
  if (!section_hypotheses(iv, rep)) return rep;
  bool sampled = false;
  auto pool = subset_pool(iv, 8, &sampled);
  for (const ElementSet& a : pool) {
    ElementSet image_a = rel_complements_of_set(iv, a);
    for (const ElementSet& extra : pool) {
      ElementSet b = a | extra;  // guarantees A subset of B
      ++rep.checked;
      if (!rel_complements_of_set(iv, b).subset_of(image_a)) {
        rep.status = CheckStatus::Refuted;
        Witness w = witness_for(iv);
        w.sets.emplace_back("A", set_to_ids(a));
        w.sets.emplace_back("B", set_to_ids(b));
        w.detail = "A in B but B^{ab} not in A^{ab}";
        rep.counterexample = std::move(w);
        return rep;
      }
    }
  }
  rep.status = CheckStatus::Verified;
  if (sampled) rep.note = "sampled subsets";
  return rep;
}

CheckReport verify_galois_idempotent(const Interval& iv) {
  CheckReport rep;
  rep.statement = "galois.idempotent";
  if (!section_hypotheses(iv, rep)) return rep;
  bool sampled = false;
  auto pool = subset_pool(iv, 12, &sampled);
  for (const ElementSet& a : pool) {
    ++rep.checked;
    ElementSet image = rel_complements_of_set(iv, a);
    if (rel_complements_of_set(iv, closure(iv, a)) != image) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.sets.emplace_back("A", set_to_ids(a));
      w.detail = "((A^{ab})^{ab})^{ab} differs from A^{ab}";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  if (sampled) rep.note = "sampled subsets";
  return rep;
}

CheckReport verify_galois_adjunction(const Interval& iv) {
  CheckReport rep;
  rep.statement = "galois.adjunction";
  if (!section_hypotheses(iv, rep)) return rep;
  bool sampled = false;
  auto pool = subset_pool(iv, 8, &sampled);
  std::vector<ElementSet> images;
  images.reserve(pool.size());
  for (const ElementSet& a : pool) images.push_back(rel_complements_of_set(iv, a));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      ++rep.checked;
      if (pool[i].subset_of(images[j]) != pool[j].subset_of(images[i])) {
        rep.status = CheckStatus::Refuted;
        Witness w = witness_for(iv);
        w.sets.emplace_back("A", set_to_ids(pool[i]));
        w.sets.emplace_back("B", set_to_ids(pool[j]));
        w.detail = "A in B^{ab} not equivalent to B in A^{ab}";
        rep.counterexample = std::move(w);
        return rep;
      }
    }
  rep.status = CheckStatus::Verified;
  if (sampled) rep.note = "sampled subsets";
  return rep;
}

CheckReport verify_closure_triple(const Interval& iv) {
  CheckReport rep;
  rep.statement = "prop1.i";
  if (!section_hypotheses(iv, rep)) return rep;
  for (ElementId c : iv.member_list()) {
    ++rep.checked;
    ElementSet image = rel_complements(iv, c);
    ElementSet biclosure = rel_complements_of_set(iv, image);
    if (!biclosure.contains(c) || rel_complements_of_set(iv, biclosure) != image) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.elements.emplace_back("c", c);
      w.detail = "closure triple fails for c";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_antichain_iff_n5(const Interval& iv) {
  CheckReport rep;
  rep.statement = "prop1.ii";
  if (!section_hypotheses(iv, rep)) return rep;
  ElementId offender = kNone;
  for (ElementId x : iv.member_list()) {
    ++rep.checked;
    if (!is_antichain(rel_complements(iv, x))) { offender = x; break; }
  }
  bool all_antichains = offender == kNone;
  auto pentagon = find_n5_through(iv);
  ++rep.checked;
  if (all_antichains != !pentagon.has_value()) {
    rep.status = CheckStatus::Refuted;
    Witness w = witness_for(iv);
    if (offender != kNone) w.elements.emplace_back("x", offender);
    if (pentagon)
      w.sets.emplace_back("pentagon",
                          std::vector<ElementId>(pentagon->begin(), pentagon->end()));
    w.detail = all_antichains ? "all antichains yet a pentagon spans the interval"
                              : "comparable relative complements without a pentagon";
    rep.counterexample = std::move(w);
    return rep;
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_convexity(const Interval& iv) {
  CheckReport rep;
  rep.statement = "prop1.iii";
  if (!section_hypotheses(iv, rep)) return rep;
  for (ElementId c : iv.member_list()) {
    ++rep.checked;
    if (!is_convex(rel_complements(iv, c))) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.elements.emplace_back("c", c);
      w.detail = "c^{ab} is not convex";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_injectivity_identity(const Interval& iv) {
  CheckReport rep;
  rep.statement = "prop1.iv";
  if (!section_hypotheses(iv, rep)) return rep;
  const auto& members = iv.member_list();
  std::vector<ElementSet> biclosure;
  biclosure.reserve(members.size());
  bool identity = true;
  for (ElementId x : members) {
    biclosure.push_back(closure(iv, iv.lattice().singleton(x)));
    if (biclosure.back() != iv.lattice().singleton(x)) identity = false;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ++rep.checked;
      if (biclosure[i] == biclosure[j] && identity) {
        rep.status = CheckStatus::Refuted;
        Witness w = witness_for(iv);
        w.elements.emplace_back("c", members[i]);
        w.elements.emplace_back("d", members[j]);
        w.detail = "biclosure map not injective although the identity holds";
        rep.counterexample = std::move(w);
        return rep;
      }
    }
  rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_modular_antichain(const Interval& iv) {
  CheckReport rep;
  rep.statement = "cor1";
  if (!section_hypotheses(iv, rep)) return rep;
  if (!is_modular(iv)) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: interval not modular";
    return rep;
  }
  bool sampled = false;
  auto pool = subset_pool(iv, 12, &sampled);
  for (const ElementSet& a : pool) {
    if (a.empty()) continue;
    ++rep.checked;
    if (!is_antichain(rel_complements_of_set(iv, a))) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.sets.emplace_back("A", set_to_ids(a));
      w.detail = "A^{ab} is not an antichain on a modular interval";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  for (ElementId c : iv.member_list()) {
    ++rep.checked;
    if (!is_antichain(closure(iv, iv.lattice().singleton(c)))) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.elements.emplace_back("c", c);
      w.detail = "(c^{ab})^{ab} is not an antichain on a modular interval";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  if (sampled) rep.note = "sampled subsets";
  return rep;
}

namespace {

bool biclosure_injective(const Interval& iv) {
  const auto& members = iv.member_list();
  std::vector<ElementSet> cl;
  cl.reserve(members.size());
  for (ElementId x : members) cl.push_back(closure(iv, iv.lattice().singleton(x)));
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      if (cl[i] == cl[j]) return false;
  return true;
}

}  // namespace

ElementId find_biclosure_fixed_point(const Interval& iv, ElementId c) {
  if (!iv.contains(c))
    throw OutsideInterval("'" + iv.lattice().element_name(c) + "' lies outside the interval");
  if (!is_complemented(iv))
    throw NotComplemented("interval is not complemented");
  if (!biclosure_injective(iv))
    throw InjectivityFailed("the biclosure map is not injective on this interval");

  const Lattice& l = iv.lattice();
  ElementId current = c;
  ElementSet cl = closure(iv, l.singleton(current));
  while (cl != l.singleton(current)) {
    // any other member of the biclosure gives a strictly smaller one
    ElementId next = kNone;
    cl.for_each([&](ElementId d) {
      if (next == kNone && d != current) next = d;
    });
    if (next == kNone)
      throw std::logic_error("biclosure descent stalled (internal consistency)");
    ElementSet smaller = closure(iv, l.singleton(next));
    if (!smaller.subset_of(cl) || smaller == cl)
      throw std::logic_error("biclosure descent not strict (internal consistency)");
    current = next;
    cl = std::move(smaller);
  }
  return current;
}

CheckReport verify_fixed_point(const Interval& iv) {
  CheckReport rep;
  rep.statement = "fixedpoint";
  if (!section_hypotheses(iv, rep)) return rep;
  if (!biclosure_injective(iv)) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: biclosure map not injective";
    return rep;
  }
  const Lattice& l = iv.lattice();
  for (ElementId c : iv.member_list()) {
    ++rep.checked;
    ElementId d = find_biclosure_fixed_point(iv, c);
    bool ok = closure(iv, l.singleton(c)).contains(d) &&
              closure(iv, l.singleton(d)) == l.singleton(d);
    if (!ok) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.elements.emplace_back("c", c);
      w.elements.emplace_back("d", d);
      w.detail = "returned element is not a fixed point inside (c^{ab})^{ab}";
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

namespace {

struct Le1Conditions {
  bool c[6];
};

Le1Conditions evaluate_le1_conditions(const Interval& iv) {
  const Lattice& l = iv.lattice();
  const auto& members = iv.member_list();
  std::vector<ElementSet> rc;
  rc.reserve(members.size());
  for (ElementId x : members) rc.push_back(rel_complements(iv, x));
  auto idx = [&](ElementId x) {
    return static_cast<std::size_t>(
        std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };
  Le1Conditions out{{true, true, true, true, true, true}};
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      ElementId x = members[i], y = members[j];
      const ElementSet& rx = rc[i];
      const ElementSet& ry = rc[j];
      const ElementSet& rmeet = rc[idx(l.meet(x, y))];
      const ElementSet& rjoin = rc[idx(l.join(x, y))];
      ElementSet jset = join_set(rx, ry);
      ElementSet mset = meet_set(rx, ry);
      if (out.c[0] && !le1(jset, rmeet)) out.c[0] = false;
      if (out.c[1] && l.leq(x, y) && !le1(ry, rx)) out.c[1] = false;
      if (out.c[2] && !le1(rjoin, mset)) out.c[2] = false;
      if (out.c[3] && !jset.subset_of(rmeet)) out.c[3] = false;
      if (out.c[4] && !mset.subset_of(rjoin)) out.c[4] = false;
      if (out.c[5] && !eq1(rjoin, mset)) out.c[5] = false;
    }
  return out;
}

// antecedent conditions (0-based indices into (i)..(vi)) and the consequent
struct Implication {
  const char* name;
  std::vector<int> antecedent;
  int consequent;
};

const std::vector<Implication>& implication_graph() {
  static const std::vector<Implication> graph = {
      {"(i) implies (ii)", {0}, 1},
      {"(ii) implies (iii)", {1}, 2},
      {"(iii) implies (ii)", {2}, 1},
      {"(iv) implies (i)", {3}, 0},
      {"(iv) implies (ii)", {3}, 1},
      {"(iv) implies (iii)", {3}, 2},
      {"(iv) and (v) imply (vi)", {3, 4}, 5},
  };
  return graph;
}

}  // namespace

CheckReport verify_le1_theorem(const Interval& iv) {
  CheckReport rep;
  rep.statement = "le1.theorem";
  if (!section_hypotheses(iv, rep)) return rep;
  Le1Conditions cond = evaluate_le1_conditions(iv);
  rep.checked = static_cast<long long>(iv.size()) * static_cast<long long>(iv.size()) * 6;
  const auto& graph = implication_graph();
  for (std::size_t k = 0; k < graph.size(); ++k) {
    bool antecedent = true;
    for (int a : graph[k].antecedent) antecedent = antecedent && cond.c[a];
    if (antecedent && !cond.c[graph[k].consequent]) {
      rep.status = CheckStatus::Refuted;
      Witness w = witness_for(iv);
      w.elements.emplace_back("implication", static_cast<ElementId>(k));
      std::string vals;
      for (int i = 0; i < 6; ++i) vals += cond.c[i] ? '1' : '0';
      w.detail = std::string(graph[k].name) + " fails; condition values " + vals;
      rep.counterexample = std::move(w);
      return rep;
    }
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_prop3(const Interval& iv) {
  CheckReport rep;
  rep.statement = "prop3";
  const Lattice& l = iv.lattice();
  ElementId x = iv.lower(), y = iv.upper();
  for (ElementId z : iv.member_list()) {
    for (ElementId u = 0; u < l.size(); ++u) {
      ElementId from_below = l.meet(l.join(u, x), y);
      ElementId from_above = l.join(l.meet(u, y), x);
      if (from_below != from_above) continue;  // cond1 fails, nothing claimed
      ++rep.checked;
      bool cond2 = l.meet(l.join(u, x), z) == x && l.join(l.meet(u, y), z) == y;
      bool member = l.join(z, from_below) == y && l.meet(z, from_below) == x;
      if (member != cond2) {
        rep.status = CheckStatus::Refuted;
        Witness w = witness_for(iv);
        w.elements.emplace_back("z", z);
        w.elements.emplace_back("u", u);
        w.elements.emplace_back("v", from_below);
        w.detail = "membership of the induced element disagrees with cond2";
        rep.counterexample = std::move(w);
        return rep;
      }
    }
  }
  rep.status = rep.checked ? CheckStatus::Verified : CheckStatus::Vacuous;
  if (!rep.checked) rep.note = "no ambient element satisfies cond1";
  return rep;
}

CheckReport verify_prop3_modular(const Lattice& l) {
  CheckReport rep;
  rep.statement = "prop3.modular";
  if (!is_modular(l)) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: lattice not modular";
    return rep;
  }
  for (auto [a, b] : comparable_pairs(l)) {
    for (ElementId u = 0; u < l.size(); ++u) {
      ++rep.checked;
      if (l.meet(l.join(u, a), b) != l.join(l.meet(u, b), a)) {
        rep.status = CheckStatus::Refuted;
        Witness w = witness_for(l);
        w.interval = std::make_pair(a, b);
        w.elements.emplace_back("u", u);
        w.detail = "cond1 fails in a modular lattice";
        rep.counterexample = std::move(w);
        return rep;
      }
    }
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

namespace {

// Left side of the th2 equivalence: the interval satisfies the identity
// (x^{ab})^{ab} = x.
bool th2_identity(const Interval& iv) {
  for (ElementId x : iv.member_list())
    if (closure(iv, iv.lattice().singleton(x)) != iv.lattice().singleton(x)) return false;
  return true;
}

// Right side: for every x and every y in (x^{ab})^{ab} some z in y^{ab}
// satisfies (x v y) ^ z = a or (x ^ y) v z = b.
bool th2_condition(const Interval& iv) {
  const Lattice& l = iv.lattice();
  for (ElementId x : iv.member_list()) {
    ElementSet bic = closure(iv, l.singleton(x));
    bool ok = true;
    bic.for_each([&](ElementId y) {
      if (!ok) return;
      bool found = false;
      rel_complements(iv, y).for_each([&](ElementId z) {
        if (found) return;
        if (l.meet(l.join(x, y), z) == iv.lower() || l.join(l.meet(x, y), z) == iv.upper())
          found = true;
      });
      if (!found) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

CheckReport verify_th2(const Interval& iv) {
  CheckReport rep;
  rep.statement = "th2";
  if (!is_modular(iv)) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: interval not modular";
    return rep;
  }
  if (!is_complemented(iv)) {
    rep.status = CheckStatus::Vacuous;
    rep.note = "hypothesis not met: interval not complemented";
    return rep;
  }
  bool lhs = th2_identity(iv);
  bool rhs = th2_condition(iv);
  rep.checked = static_cast<long long>(iv.size());
  if (lhs != rhs) {
    rep.status = CheckStatus::Refuted;
    Witness w = witness_for(iv);
    w.detail = std::string("identity ") + (lhs ? "holds" : "fails") +
               " but the induced-complement condition " + (rhs ? "holds" : "fails");
    rep.counterexample = std::move(w);
    return rep;
  }
  rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_th1(std::span<const Lattice> factors, bool parallel) {
  if (factors.empty()) throw BadFactors("empty factor list");
  std::size_t booleans = 0;
  for (const Lattice& f : factors) {
    if (f.kind() == Lattice::Kind::Boolean) ++booleans;
    else if (f.kind() != Lattice::Kind::Mn)
      throw BadFactors("factor '" + f.name() + "' is neither a Boolean algebra nor an M_n");
  }
  if (booleans != 1)
    throw BadFactors("expected exactly one Boolean algebra factor, got " +
                     std::to_string(booleans));

  Lattice product = direct_product(factors);
  auto pairs = comparable_pairs(product);

  CheckReport rep;
  rep.statement = "th1";
  std::vector<long long> counts(pairs.size(), 0);
  std::vector<ElementId> bad_element(pairs.size(), kNone);
  std::vector<int> bad_kind(pairs.size(), 0);  // 1 = closure, 2 = bar/hat

  const bool use_parallel = parallel;
  (void)use_parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (use_parallel)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i) {
    Interval iv(product, pairs[static_cast<std::size_t>(i)].first,
                pairs[static_cast<std::size_t>(i)].second);
    for (ElementId c : iv.member_list()) {
      ++counts[static_cast<std::size_t>(i)];
      if (closure(iv, product.singleton(c)) != product.singleton(c)) {
        bad_element[static_cast<std::size_t>(i)] = c;
        bad_kind[static_cast<std::size_t>(i)] = 1;
        break;
      }
      ElementSet rc = rel_complements(iv, c);
      if (bar(iv, c) != rc || hat(iv, c) != rc) {
        bad_element[static_cast<std::size_t>(i)] = c;
        bad_kind[static_cast<std::size_t>(i)] = 2;
        break;
      }
    }
  }

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    rep.checked += counts[i];
    if (bad_element[i] != kNone && rep.status != CheckStatus::Refuted) {
      rep.status = CheckStatus::Refuted;
      Witness w;
      w.lattice = product.name();
      w.interval = pairs[i];
      w.elements.emplace_back("c", bad_element[i]);
      w.detail = bad_kind[i] == 1 ? "(c^{ab})^{ab} differs from {c}"
                                  : "bar or hat differs from c^{ab}";
      rep.counterexample = std::move(w);
    }
  }
  if (rep.status != CheckStatus::Refuted) rep.status = CheckStatus::Verified;
  return rep;
}

CheckReport verify_remark_distinct(const Lattice& l) {
  CheckReport rep;
  rep.statement = "remark.distinct";
  for (auto [x, y] : comparable_pairs(l)) {
    if (x == y) continue;
    for (ElementId z = 0; z < l.size(); ++z) {
      if (!(l.lt(x, z) && l.lt(z, y))) continue;
      auto comps = complements(l, z).to_vector();
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
          ++rep.checked;
          ElementId d = comps[i], e = comps[j];
          bool below_same = l.meet(l.join(d, x), y) == l.meet(l.join(e, x), y);
          bool above_same = l.join(l.meet(d, y), x) == l.join(l.meet(e, y), x);
          if (below_same || above_same) {
            rep.status = CheckStatus::Refuted;
            Witness w = witness_for(l);
            w.interval = std::make_pair(x, y);
            w.elements.emplace_back("z", z);
            w.elements.emplace_back("d", d);
            w.elements.emplace_back("e", e);
            w.detail = below_same ? "two complements induce the same element from below"
                                  : "two complements induce the same element from above";
            rep.counterexample = std::move(w);
            return rep;
          }
        }
    }
  }
  rep.status = rep.checked ? CheckStatus::Verified : CheckStatus::Vacuous;
  if (!rep.checked) rep.note = "no element has two complements strictly inside an interval";
  return rep;
}

// --- registry ----------------------------------------------------------------

namespace {

constexpr StatementInfo kRegistry[] = {
    {"galois.extensive", Scope::PerInterval, "A is contained in (A^{ab})^{ab}",
     &verify_galois_extensive, nullptr},
    {"galois.antitone", Scope::PerInterval, "A in B implies B^{ab} in A^{ab}",
     &verify_galois_antitone, nullptr},
    {"galois.idempotent", Scope::PerInterval, "((A^{ab})^{ab})^{ab} equals A^{ab}",
     &verify_galois_idempotent, nullptr},
    {"galois.adjunction", Scope::PerInterval, "A in B^{ab} iff B in A^{ab}",
     &verify_galois_adjunction, nullptr},
    {"galois.nonempty", Scope::PerInterval, "(A^{ab})^{ab} nonempty for nonempty A",
     &verify_galois_nonempty, nullptr},
    {"prop1.i", Scope::PerInterval, "c in (c^{ab})^{ab} and the triple image collapses",
     &verify_closure_triple, nullptr},
    {"prop1.ii", Scope::PerInterval, "all x^{ab} antichains iff no spanning pentagon",
     &verify_antichain_iff_n5, nullptr},
    {"prop1.iii", Scope::PerInterval, "c^{ab} is convex", &verify_convexity, nullptr},
    {"prop1.iv", Scope::PerInterval, "the closure identity forces biclosure injectivity",
     &verify_injectivity_identity, nullptr},
    {"cor1", Scope::PerInterval, "A^{ab} and (c^{ab})^{ab} antichains on modular intervals",
     &verify_modular_antichain, nullptr},
    {"fixedpoint", Scope::PerInterval, "biclosure descent reaches a fixed point",
     &verify_fixed_point, nullptr},
    {"le1.theorem", Scope::PerInterval, "implication graph among the six <=1 conditions",
     &verify_le1_theorem, nullptr},
    {"prop3", Scope::PerInterval, "induced element lies in z^{xy} iff cond2",
     &verify_prop3, nullptr},
    {"prop3.modular", Scope::PerLattice, "cond1 holds everywhere in modular lattices",
     nullptr, &verify_prop3_modular},
    {"th2", Scope::PerInterval,
     "closure identity equivalent to the induced-complement condition",
     &verify_th2, nullptr},
    {"remark.patterns", Scope::PerLattice,
     "pattern occurrences give one shared induced relative complement",
     nullptr, &verify_remark_patterns},
};

}  // namespace

std::span<const StatementInfo> statement_registry() { return kRegistry; }

std::vector<const StatementInfo*> resolve_statements(const std::vector<std::string>& patterns) {
  std::vector<const StatementInfo*> out;
  auto add = [&](const StatementInfo& st) {
    for (const StatementInfo* have : out)
      if (have == &st) return;
    out.push_back(&st);
  };
  if (patterns.empty()) {
    for (const StatementInfo& st : kRegistry) add(st);
    return out;
  }
  for (const std::string& pat : patterns) {
    bool matched = false;
    if (!pat.empty() && pat.back() == '*') {
      std::string prefix = pat.substr(0, pat.size() - 1);
      for (const StatementInfo& st : kRegistry)
        if (std::string_view(st.id).substr(0, prefix.size()) == prefix) {
          add(st);
          matched = true;
        }
    } else {
      for (const StatementInfo& st : kRegistry)
        if (pat == st.id) {
          add(st);
          matched = true;
        }
    }
    if (!matched) throw UnknownStatement("unknown statement '" + pat + "'");
  }
  return out;
}

CheckReport check_statement(const Lattice& l, const StatementInfo& st) {
  if (st.scope == Scope::PerLattice) return st.lattice_fn(l);
  CheckReport agg;
  agg.statement = st.id;
  for (auto [a, b] : comparable_pairs(l)) {
    CheckReport one = st.interval_fn(Interval(l, a, b));
    merge_report(agg, one);
    if (agg.status == CheckStatus::Refuted) break;
  }
  return agg;
}

// --- witness re-evaluation ---------------------------------------------------

// defined in pattern.cpp
bool reverify_pattern_witness(const Lattice& l, const CheckReport& report);

namespace {

std::optional<ElementId> role_element(const Witness& w, std::string_view role) {
  for (const auto& [name, id] : w.elements)
    if (name == role) return id;
  return std::nullopt;
}

std::optional<std::vector<ElementId>> role_set(const Witness& w, std::string_view role) {
  for (const auto& [name, ids] : w.sets)
    if (name == role) return ids;
  return std::nullopt;
}

bool ids_valid(const Lattice& l, const Witness& w) {
  for (const auto& [name, id] : w.elements)
    if (name != "implication" && id >= l.size()) return false;
  for (const auto& [name, ids] : w.sets)
    for (ElementId id : ids)
      if (id >= l.size()) return false;
  return true;
}

}  // namespace

bool witness_violates(const Lattice& l, const CheckReport& report) {
  if (!report.counterexample) return false;
  const Witness& w = *report.counterexample;
  if (!ids_valid(l, w)) return false;

  std::optional<Interval> iv;
  if (w.interval) {
    if (w.interval->first >= l.size() || w.interval->second >= l.size()) return false;
    if (!l.leq(w.interval->first, w.interval->second)) return false;
    iv.emplace(l, w.interval->first, w.interval->second);
  }
  const std::string& id = report.statement;

  try {
    if (id.rfind("galois.", 0) == 0 || id.rfind("prop1", 0) == 0 || id == "cor1" ||
        id == "fixedpoint" || id == "le1.theorem" || id == "th2") {
      if (!iv || iv->degenerate() || !is_complemented(*iv)) return false;
    }

    if (id == "galois.extensive") {
      auto a = role_set(w, "A");
      if (!a) return false;
      ElementSet sa = ids_to_set(l, *a);
      if (!sa.subset_of(iv->members())) return false;
      return !sa.subset_of(closure(*iv, sa));
    }
    if (id == "galois.antitone") {
      auto a = role_set(w, "A"), b = role_set(w, "B");
      if (!a || !b) return false;
      ElementSet sa = ids_to_set(l, *a), sb = ids_to_set(l, *b);
      if (!sa.subset_of(iv->members()) || !sb.subset_of(iv->members())) return false;
      if (!sa.subset_of(sb)) return false;
      return !rel_complements_of_set(*iv, sb).subset_of(rel_complements_of_set(*iv, sa));
    }
    if (id == "galois.idempotent") {
      auto a = role_set(w, "A");
      if (!a) return false;
      ElementSet sa = ids_to_set(l, *a);
      if (!sa.subset_of(iv->members())) return false;
      return rel_complements_of_set(*iv, closure(*iv, sa)) != rel_complements_of_set(*iv, sa);
    }
    if (id == "galois.adjunction") {
      auto a = role_set(w, "A"), b = role_set(w, "B");
      if (!a || !b) return false;
      ElementSet sa = ids_to_set(l, *a), sb = ids_to_set(l, *b);
      if (!sa.subset_of(iv->members()) || !sb.subset_of(iv->members())) return false;
      return sa.subset_of(rel_complements_of_set(*iv, sb)) !=
             sb.subset_of(rel_complements_of_set(*iv, sa));
    }
    if (id == "galois.nonempty") {
      auto a = role_set(w, "A");
      if (!a || a->empty()) return false;
      ElementSet sa = ids_to_set(l, *a);
      if (!sa.subset_of(iv->members())) return false;
      return closure(*iv, sa).empty();
    }
    if (id == "prop1.i") {
      auto c = role_element(w, "c");
      if (!c || !iv->contains(*c)) return false;
      ElementSet image = rel_complements(*iv, *c);
      ElementSet bic = rel_complements_of_set(*iv, image);
      return !bic.contains(*c) || rel_complements_of_set(*iv, bic) != image;
    }
    if (id == "prop1.ii") {
      bool all = true;
      for (ElementId x : iv->member_list())
        if (!is_antichain(rel_complements(*iv, x))) { all = false; break; }
      return all == find_n5_through(*iv).has_value();
    }
    if (id == "prop1.iii") {
      auto c = role_element(w, "c");
      if (!c || !iv->contains(*c)) return false;
      return !is_convex(rel_complements(*iv, *c));
    }
    if (id == "prop1.iv") {
      auto c = role_element(w, "c"), d = role_element(w, "d");
      if (!c || !d || *c == *d || !iv->contains(*c) || !iv->contains(*d)) return false;
      if (closure(*iv, l.singleton(*c)) != closure(*iv, l.singleton(*d))) return false;
      return th2_identity(*iv);
    }
    if (id == "cor1") {
      if (!is_modular(*iv)) return false;
      if (auto a = role_set(w, "A")) {
        ElementSet sa = ids_to_set(l, *a);
        if (sa.empty() || !sa.subset_of(iv->members())) return false;
        return !is_antichain(rel_complements_of_set(*iv, sa));
      }
      if (auto c = role_element(w, "c")) {
        if (!iv->contains(*c)) return false;
        return !is_antichain(closure(*iv, l.singleton(*c)));
      }
      return false;
    }
    if (id == "fixedpoint") {
      auto c = role_element(w, "c");
      if (!c || !iv->contains(*c) || !biclosure_injective(*iv)) return false;
      ElementId d = find_biclosure_fixed_point(*iv, *c);
      return !(closure(*iv, l.singleton(*c)).contains(d) &&
               closure(*iv, l.singleton(d)) == l.singleton(d));
    }
    if (id == "le1.theorem") {
      auto k = role_element(w, "implication");
      if (!k || *k >= implication_graph().size()) return false;
      Le1Conditions cond = evaluate_le1_conditions(*iv);
      const Implication& imp = implication_graph()[*k];
      bool antecedent = true;
      for (int a : imp.antecedent) antecedent = antecedent && cond.c[a];
      return antecedent && !cond.c[imp.consequent];
    }
    if (id == "prop3") {
      auto z = role_element(w, "z"), u = role_element(w, "u");
      if (!z || !u || !iv || !iv->contains(*z)) return false;
      ElementId x = iv->lower(), y = iv->upper();
      ElementId below = l.meet(l.join(*u, x), y);
      if (below != l.join(l.meet(*u, y), x)) return false;  // cond1 must hold
      bool cond2 = l.meet(l.join(*u, x), *z) == x && l.join(l.meet(*u, y), *z) == y;
      bool member = l.join(*z, below) == y && l.meet(*z, below) == x;
      return member != cond2;
    }
    if (id == "prop3.modular") {
      auto u = role_element(w, "u");
      if (!u || !iv || !is_modular(l)) return false;
      ElementId a = iv->lower(), b = iv->upper();
      return l.meet(l.join(*u, a), b) != l.join(l.meet(*u, b), a);
    }
    if (id == "th2") {
      if (!is_modular(*iv)) return false;
      return th2_identity(*iv) != th2_condition(*iv);
    }
    if (id == "remark.distinct") {
      auto z = role_element(w, "z"), d = role_element(w, "d"), e = role_element(w, "e");
      if (!z || !d || !e || !iv || *d == *e) return false;
      ElementId x = iv->lower(), y = iv->upper();
      if (!(l.lt(x, *z) && l.lt(*z, y))) return false;
      ElementSet comps = complements(l, *z);
      if (!comps.contains(*d) || !comps.contains(*e)) return false;
      return l.meet(l.join(*d, x), y) == l.meet(l.join(*e, x), y) ||
             l.join(l.meet(*d, y), x) == l.join(l.meet(*e, y), x);
    }
    if (id == "remark.patterns") return reverify_pattern_witness(l, report);
    if (id == "th1") {
      auto c = role_element(w, "c");
      if (!c || !iv || !iv->contains(*c)) return false;
      ElementSet rc = rel_complements(*iv, *c);
      return closure(*iv, l.singleton(*c)) != l.singleton(*c) || bar(*iv, *c) != rc ||
             hat(*iv, *c) != rc;
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

}  // namespace relcomp
