#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "relcomp/fixtures.hpp"
#include "relcomp/verify.hpp"

namespace relcomp {

namespace {

// Pattern elements are assigned bounds-first, then by how many order
// constraints the next element has against the already-placed ones.
std::vector<ElementId> assignment_order(const Lattice& pattern) {
  std::size_t n = pattern.size();
  std::vector<ElementId> order;
  std::vector<bool> placed(n, false);
  auto place = [&](ElementId p) {
    order.push_back(p);
    placed[p] = true;
  };
  place(pattern.bottom());
  if (pattern.top() != pattern.bottom()) place(pattern.top());
  while (order.size() < n) {
    ElementId best = kNone;
    int best_links = -1;
    for (ElementId p = 0; p < n; ++p) {
      if (placed[p]) continue;
      int links = 0;
      for (ElementId q : order)
        if (pattern.leq(p, q) || pattern.leq(q, p)) ++links;
      if (links > best_links) {
        best_links = links;
        best = p;
      }
    }
    place(best);
  }
  return order;
}

bool full_tables_preserved(const Lattice& target, const Lattice& pattern,
                           const std::vector<ElementId>& emb) {
  std::size_t n = pattern.size();
  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q) {
      if (target.join(emb[p], emb[q]) != emb[pattern.join(p, q)]) return false;
      if (target.meet(emb[p], emb[q]) != emb[pattern.meet(p, q)]) return false;
    }
  return true;
}

// All anchored embeddings, no image deduplication; ascending candidate scan
// makes the enumeration order deterministic.
std::vector<std::vector<ElementId>> all_embeddings(const Lattice& target,
                                                   const Lattice& pattern) {
  std::vector<std::vector<ElementId>> out;
  std::size_t pn = pattern.size(), tn = target.size();
  if (pn > tn) return out;
  if (pn == 1) {
    if (target.size() == 1) out.push_back({target.bottom()});
    return out;
  }

  std::vector<ElementId> order = assignment_order(pattern);
  std::vector<ElementId> emb(pn, kNone);
  std::vector<bool> used(tn, false);

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      if (full_tables_preserved(target, pattern, emb)) out.push_back(emb);
      return;
    }
    ElementId p = order[k];
    ElementId lo = 0, hi = static_cast<ElementId>(tn);
    if (p == pattern.bottom()) { lo = target.bottom(); hi = lo + 1; }
    if (p == pattern.top()) { lo = target.top(); hi = lo + 1; }
    for (ElementId t = lo; t < hi; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ElementId q = order[j];
        if (pattern.leq(p, q) != target.leq(t, emb[q])) ok = false;
        else if (pattern.leq(q, p) != target.leq(emb[q], t)) ok = false;
      }
      if (!ok) continue;
      emb[p] = t;
      used[t] = true;
      self(self, k + 1);
      used[t] = false;
      emb[p] = kNone;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

std::vector<PatternMatch> find_pattern(const Lattice& target, const Lattice& pattern) {
  auto embeddings = all_embeddings(target, pattern);

  // one match per image sublattice, represented by the least embedding
  std::map<std::vector<ElementId>, std::vector<ElementId>> by_image;
  for (const auto& emb : embeddings) {
    std::vector<ElementId> image = emb;
    std::sort(image.begin(), image.end());
    auto [it, inserted] = by_image.emplace(std::move(image), emb);
    if (!inserted && emb < it->second) it->second = emb;
  }

  std::vector<PatternMatch> out;
  out.reserve(by_image.size());
  for (auto& [image, emb] : by_image)
    out.push_back(PatternMatch{&pattern, &target, emb});
  std::sort(out.begin(), out.end(), [](const PatternMatch& a, const PatternMatch& b) {
    return a.embedding < b.embedding;
  });
  return out;
}

namespace {

struct PatternRoles {
  ElementId d, e, c, a, b;
};

PatternRoles roles_of(const Lattice& pattern) {
  return PatternRoles{pattern.require("d"), pattern.require("e"), pattern.require("c"),
                      pattern.require("a"), pattern.require("b")};
}

// Shared conclusion check for one embedding. from_below selects the
// (d v a) ^ b reading; the dual uses (d ^ b) v a.
bool remark_conclusion_holds(const Lattice& t, const PatternRoles& r,
                             const std::vector<ElementId>& emb, bool from_below,
                             std::string* why) {
  ElementId d = emb[r.d], e = emb[r.e], c = emb[r.c], a = emb[r.a], b = emb[r.b];
  if (d == e) { if (why) *why = "the two marked complements coincide"; return false; }
  ElementSet comps = complements(t, c);
  if (!comps.contains(d) || !comps.contains(e)) {
    if (why) *why = "a marked element is not a complement of c";
    return false;
  }
  ElementId v1 = from_below ? t.meet(t.join(d, a), b) : t.join(t.meet(d, b), a);
  ElementId v2 = from_below ? t.meet(t.join(e, a), b) : t.join(t.meet(e, b), a);
  if (v1 != v2) { if (why) *why = "the two induced elements differ"; return false; }
  if (!(t.join(c, v1) == b && t.meet(c, v1) == a)) {
    if (why) *why = "the induced element is not a relative complement of c";
    return false;
  }
  return true;
}

}  // namespace

CheckReport verify_remark_patterns(const Lattice& target) {
  CheckReport rep;
  rep.statement = "remark.patterns";
  static const Lattice pattern6 = fixtures::fig6_pattern();
  static const Lattice pattern7 = fixtures::fig7_pattern();

  struct Case {
    const Lattice* pattern;
    bool from_below;
    const char* tag;
  };
  const Case cases[] = {{&pattern6, true, "fig6"}, {&pattern7, false, "fig7"}};

  for (const Case& cs : cases) {
    PatternRoles r = roles_of(*cs.pattern);
    for (const auto& emb : all_embeddings(target, *cs.pattern)) {
      ++rep.checked;
      std::string why;
      if (!remark_conclusion_holds(target, r, emb, cs.from_below, &why)) {
        rep.status = CheckStatus::Refuted;
        Witness w;
        w.lattice = target.name();
        w.interval = std::make_pair(emb[r.a], emb[r.b]);
        w.elements.emplace_back("d", emb[r.d]);
        w.elements.emplace_back("e", emb[r.e]);
        w.elements.emplace_back("c", emb[r.c]);
        w.sets.emplace_back("embedding", emb);
        w.detail = std::string(cs.tag) + ": " + why;
        rep.counterexample = std::move(w);
        return rep;
      }
    }
  }
  rep.status = rep.checked ? CheckStatus::Verified : CheckStatus::Vacuous;
  if (!rep.checked) rep.note = "no pattern occurrences";
  return rep;
}

// Re-evaluates a remark.patterns witness: the stored embedding must really
// embed the named pattern, and the conclusion must really fail for it.
bool reverify_pattern_witness(const Lattice& l, const CheckReport& report) {
  if (!report.counterexample) return false;
  const Witness& w = *report.counterexample;
  const std::vector<ElementId>* emb = nullptr;
  for (const auto& [name, ids] : w.sets)
    if (name == "embedding") emb = &ids;
  if (!emb) return false;

  bool from_below = w.detail.rfind("fig6", 0) == 0;
  static const Lattice pattern6 = fixtures::fig6_pattern();
  static const Lattice pattern7 = fixtures::fig7_pattern();
  const Lattice& pattern = from_below ? pattern6 : pattern7;
  if (emb->size() != pattern.size()) return false;
  for (ElementId t : *emb)
    if (t >= l.size()) return false;
  std::set<ElementId> distinct(emb->begin(), emb->end());
  if (distinct.size() != emb->size()) return false;
  if ((*emb)[pattern.bottom()] != l.bottom() || (*emb)[pattern.top()] != l.top()) return false;
  if (!full_tables_preserved(l, pattern, *emb)) return false;
  return !remark_conclusion_holds(l, roles_of(pattern), *emb, from_below, nullptr);
}

}  // namespace relcomp
