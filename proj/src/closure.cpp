#include "relcomp/closure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace relcomp {

ElementSet closure(const Interval& iv, const ElementSet& a) {
  return rel_complements_of_set(iv, rel_complements_of_set(iv, a));
}

bool le1(const ElementSet& a, const ElementSet& b) {
  require_same_universe(a, b);
  const Lattice& l = *a.universe();
  bool ok = true;
  a.for_each([&](ElementId x) {
    if (ok && !b.intersects(l.up_set(x))) ok = false;
  });
  return ok;
}

bool eq1(const ElementSet& a, const ElementSet& b) { return le1(a, b) && le1(b, a); }

namespace {

// (cardinality, lexicographic) order used for the family listing
bool family_less(const ElementSet& a, const ElementSet& b) {
  std::size_t ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

}  // namespace

std::optional<std::size_t> ClosedFamily::index_of(const ElementSet& s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s, family_less);
  if (it != sets_.end() && *it == s) return static_cast<std::size_t>(it - sets_.begin());
  return std::nullopt;
}

void ClosedFamily::verify_axioms() const {
  std::size_t k = sets_.size();
  const ElementSet& full = sets_[top_index()];
  if (!sets_[bottom_index()].empty() || full != interval_.members())
    throw std::logic_error("closed family bounds are wrong");
  for (std::size_t i = 0; i < k; ++i) {
    if (ortho_[ortho_[i]] != i)
      throw std::logic_error("orthocomplementation is not an involution");
    if (sets_[i].intersects(sets_[ortho_[i]]))
      throw std::logic_error("a closed set meets its orthocomplement");
    if (meet(i, ortho_[i]) != bottom_index() || join(i, ortho_[i]) != top_index())
      throw std::logic_error("complementation law fails in the closed family");
    for (std::size_t j = 0; j < k; ++j) {
      if (sets_[i].subset_of(sets_[j]) && !sets_[ortho_[j]].subset_of(sets_[ortho_[i]]))
        throw std::logic_error("orthocomplementation does not reverse inclusion");
      if ((sets_[i] & sets_[j]) != sets_[meet(i, j)])
        throw std::logic_error("meet table disagrees with intersection");
    }
  }
}

ClosedFamily closed_family(const Interval& iv) {
  if (iv.degenerate())
    throw DegenerateInterval("closed family needs a non-degenerate interval");

  ClosedFamily fam(iv);
  auto less = family_less;

  std::vector<ElementSet> found;
  auto add = [&](const ElementSet& s) {
    auto it = std::lower_bound(found.begin(), found.end(), s, less);
    if (it != found.end() && *it == s) return false;
    found.insert(it, s);
    return true;
  };

  // Seeds: every x^{ab}, the image of the full member set, and the image
  // of the empty set; then close under pairwise intersection.
  std::deque<ElementSet> work;
  auto seed = [&](ElementSet s) {
    if (add(s)) work.push_back(std::move(s));
  };
  for (ElementId x : iv.member_list()) seed(rel_complements(iv, x));
  seed(rel_complements_of_set(iv, iv.members()));
  seed(rel_complements_of_set(iv, ElementSet(iv.lattice())));
  while (!work.empty()) {
    ElementSet s = std::move(work.front());
    work.pop_front();
    // snapshot: new sets join the queue themselves
    std::vector<ElementSet> snapshot = found;
    for (const ElementSet& t : snapshot) {
      ElementSet meet = s & t;
      if (add(meet)) work.push_back(std::move(meet));
    }
  }

  fam.sets_ = std::move(found);
  std::size_t k = fam.sets_.size();

  fam.ortho_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    ElementSet image = rel_complements_of_set(iv, fam.sets_[i]);
    if (closure(iv, fam.sets_[i]) != fam.sets_[i])
      throw std::logic_error("enumerated family contains a non-closed set");
    auto idx = fam.index_of(image);
    if (!idx) throw std::logic_error("orthocomplement escaped the enumerated family");
    fam.ortho_[i] = *idx;
  }

  fam.join_.resize(k * k);
  fam.meet_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto m = fam.index_of(fam.sets_[i] & fam.sets_[j]);
      if (!m) throw std::logic_error("family not closed under intersection");
      fam.meet_[i * k + j] = *m;
      // A v B = (A^{ab} ^ B^{ab})^{ab}
      auto jm = fam.index_of(fam.sets_[fam.ortho_[i]] & fam.sets_[fam.ortho_[j]]);
      if (!jm) throw std::logic_error("family not closed under intersection");
      fam.join_[i * k + j] = fam.ortho_[*jm];
    }

  fam.verify_axioms();
  return fam;
}

}  // namespace relcomp
