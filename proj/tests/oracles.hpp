#pragma once

// Test-side oracles: straight-from-definition recomputations, kept separate
// from the library paths they check.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "relcomp/closure.hpp"
#include "relcomp/complement.hpp"
#include "relcomp/lattice.hpp"

namespace oracle {

using namespace relcomp;

inline ElementSet complements_brute(const Lattice& l, ElementId x) {
  ElementSet r(l);
  for (ElementId y = 0; y < l.size(); ++y) {
    bool top_ok = l.join(x, y) == l.top();
    bool bottom_ok = l.meet(x, y) == l.bottom();
    if (top_ok && bottom_ok) r.insert(y);
  }
  return r;
}

// membership decided by leq directly, not through Interval
inline ElementSet rel_complements_brute(const Lattice& l, ElementId a, ElementId b,
                                        ElementId x) {
  ElementSet r(l);
  for (ElementId y = 0; y < l.size(); ++y) {
    if (!l.leq(a, y) || !l.leq(y, b)) continue;
    if (l.join(x, y) == b && l.meet(x, y) == a) r.insert(y);
  }
  return r;
}

// reflexivity, antisymmetry, transitivity, the lub/glb property of the
// tables, and absorption/commutativity/associativity on all triples
inline bool tables_match_order(const Lattice& l) {
  std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x) {
    if (!l.leq(x, x)) return false;
    if (!l.leq(l.bottom(), x) || !l.leq(x, l.top())) return false;
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (x != y && l.leq(x, y) && l.leq(y, x)) return false;
      ElementId j = l.join(x, y), m = l.meet(x, y);
      if (j != l.join(y, x) || m != l.meet(y, x)) return false;
      if (!l.leq(x, j) || !l.leq(y, j) || !l.leq(m, x) || !l.leq(m, y)) return false;
      for (ElementId z = 0; z < n; ++z) {
        if (l.leq(x, z) && l.leq(y, z) && !l.leq(j, z)) return false;
        if (l.leq(z, x) && l.leq(z, y) && !l.leq(z, m)) return false;
      }
      // x <= y iff x v y = y iff x ^ y = x
      bool o = l.leq(x, y);
      if (o != (j == y) || o != (m == x)) return false;
    }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (l.join(x, l.meet(x, y)) != x) return false;
      if (l.meet(x, l.join(x, y)) != x) return false;
      for (ElementId z = 0; z < n; ++z) {
        if (l.leq(x, y) && l.leq(y, z) && !l.leq(x, z)) return false;
        if (l.join(l.join(x, y), z) != l.join(x, l.join(y, z))) return false;
        if (l.meet(l.meet(x, y), z) != l.meet(x, l.meet(y, z))) return false;
      }
    }
  return true;
}

// exhaustive scan over all 5-element subsets for a pentagon sublattice
inline bool has_n5_sublattice(const Lattice& l) {
  std::size_t n = l.size();
  if (n < 5) return false;
  std::vector<ElementId> pick(5);
  auto is_pentagon = [&]() {
    // closed under the ambient operations
    auto inside = [&](ElementId v) {
      for (ElementId p : pick)
        if (p == v) return true;
      return false;
    };
    for (ElementId x : pick)
      for (ElementId y : pick)
        if (!inside(l.join(x, y)) || !inside(l.meet(x, y))) return false;
    // shape: bottom, top, a 2-chain and an element incomparable to both
    ElementId bot = pick[0], top = pick[0];
    for (ElementId x : pick) {
      bot = l.meet(bot, x);
      top = l.join(top, x);
    }
    if (!inside(bot) || !inside(top)) return false;
    std::vector<ElementId> mid;
    for (ElementId x : pick)
      if (x != bot && x != top) mid.push_back(x);
    if (mid.size() != 3) return false;
    for (int d = 0; d < 3; ++d) {
      ElementId side = mid[d], e = mid[(d + 1) % 3], f = mid[(d + 2) % 3];
      if (!l.lt(e, f)) std::swap(e, f);
      if (!l.lt(e, f)) continue;
      if (!l.leq(side, e) && !l.leq(e, side) && !l.leq(side, f) && !l.leq(f, side))
        return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t idx, ElementId from) -> bool {
    if (idx == 5) return is_pentagon();
    for (ElementId v = from; v < n; ++v) {
      pick[idx] = v;
      if (self(self, idx + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

// distinct images A -> A^{ab} over every one of the 2^|I| subsets,
// computed from the operation tables alone, sorted (cardinality, lex)
inline std::vector<ElementSet> closed_family_brute(const Interval& iv) {
  const Lattice& l = iv.lattice();
  const auto& m = iv.member_list();
  std::size_t k = m.size();
  std::vector<ElementSet> singleton_images;
  singleton_images.reserve(k);
  for (ElementId x : m) {
    ElementSet img(l);
    for (ElementId y : m)
      if (l.join(x, y) == iv.upper() && l.meet(x, y) == iv.lower()) img.insert(y);
    singleton_images.push_back(std::move(img));
  }
  std::vector<ElementSet> out;
  auto add = [&](const ElementSet& s) {
    for (const ElementSet& have : out)
      if (have == s) return;
    out.push_back(s);
  };
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    ElementSet image = iv.members();
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) image &= singleton_images[i];
    add(image);
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

// canonical string of an order matrix: the minimum over all permutations
inline std::string min_matrix_over_perms(std::size_t n,
                                         const std::vector<char>& leq_matrix) {
  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  std::string best;
  do {
    std::string s(n * n, '0');
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s[i * n + j] = leq_matrix[perm[i] * n + perm[j]];
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline std::string brute_canonical(const Lattice& l) {
  std::size_t n = l.size();
  std::vector<char> mat(n * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) mat[x * n + y] = l.leq(x, y) ? '1' : '0';
  return min_matrix_over_perms(n, mat);
}

// Independent enumeration: every reflexive-transitive-antisymmetric
// relation on n labeled points in which the identity order is a linear
// extension, filtered down to lattices, quotiented by isomorphism through
// the all-permutations canonical form. Every isomorphism class of posets
// has such a labeling, so nothing is missed.
inline std::set<std::string> lattice_canon_classes(unsigned n) {
  std::set<std::string> classes;
  if (n == 0) return classes;
  unsigned pair_count = n * (n - 1) / 2;
  std::vector<std::vector<unsigned>> idx(n, std::vector<unsigned>(n, 0));
  {
    unsigned next = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j) idx[i][j] = next++;
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count); ++mask) {
    auto leq = [&](unsigned i, unsigned j) {
      if (i == j) return true;
      if (i < j) return ((mask >> idx[i][j]) & 1) != 0;
      return false;
    };
    bool transitive = true;
    for (unsigned i = 0; i < n && transitive; ++i)
      for (unsigned j = i + 1; j < n && transitive; ++j) {
        if (!leq(i, j)) continue;
        for (unsigned k = j + 1; k < n; ++k)
          if (leq(j, k) && !leq(i, k)) { transitive = false; break; }
      }
    if (!transitive) continue;

    bool lattice = true;
    for (unsigned x = 0; x < n && lattice; ++x)
      for (unsigned y = x + 1; y < n && lattice; ++y) {
        // unique least upper bound
        unsigned lub = n;
        for (unsigned z = 0; z < n; ++z) {
          if (!leq(x, z) || !leq(y, z)) continue;
          bool least = true;
          for (unsigned w = 0; w < n; ++w)
            if (leq(x, w) && leq(y, w) && !leq(z, w)) { least = false; break; }
          if (least) { lub = z; break; }
        }
        if (lub == n) { lattice = false; break; }
        unsigned glb = n;
        for (unsigned z = 0; z < n; ++z) {
          if (!leq(z, x) || !leq(z, y)) continue;
          bool greatest = true;
          for (unsigned w = 0; w < n; ++w)
            if (leq(w, x) && leq(w, y) && !leq(w, z)) { greatest = false; break; }
          if (greatest) { glb = z; break; }
        }
        if (glb == n) lattice = false;
      }
    if (!lattice) continue;

    std::vector<char> mat(n * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) mat[i * n + j] = leq(i, j) ? '1' : '0';
    classes.insert(min_matrix_over_perms(n, mat));
  }
  return classes;
}

}  // namespace oracle
