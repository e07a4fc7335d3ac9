#include "relcomp/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relcomp {

namespace {

// Iterated colour refinement on an order relation. leq(x, y) is any exact
// comparability oracle. Returns one colour id per vertex; colours are
// invariant under isomorphism.
template <class Leq>
std::vector<int> refine_colors(std::size_t n, Leq leq) {
  std::vector<int> color(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<int> lows, highs;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if (leq(y, x)) lows.push_back(color[y]);
        if (leq(x, y)) highs.push_back(color[y]);
      }
      std::sort(lows.begin(), lows.end());
      std::sort(highs.begin(), highs.end());
      sig[x].push_back(color[x]);
      sig[x].push_back(static_cast<int>(lows.size()));
      sig[x].insert(sig[x].end(), lows.begin(), lows.end());
      sig[x].push_back(-1);
      sig[x].insert(sig[x].end(), highs.begin(), highs.end());
    }
    // colour ids are ranks of the sorted signatures, so they are
    // independent of the vertex labelling
    std::map<std::vector<int>, int> ids;
    for (std::size_t x = 0; x < n; ++x) ids.emplace(sig[x], 0);
    int rank = 0;
    for (auto& [key, value] : ids) value = rank++;
    std::vector<int> next(n);
    for (std::size_t x = 0; x < n; ++x) next[x] = ids[sig[x]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace

std::string canonical_order_key(unsigned n, const std::vector<std::uint16_t>& down) {
  if (n > 16) throw std::invalid_argument("canonical_order_key supports at most 16 elements");
  auto leq = [&](std::size_t x, std::size_t y) { return (down[y] >> x) & 1u; };
  std::vector<int> color = refine_colors(n, leq);

  // group vertices by colour; permutations may only permute within a group
  std::vector<unsigned> verts(n);
  for (unsigned i = 0; i < n; ++i) verts[i] = i;
  std::sort(verts.begin(), verts.end(),
            [&](unsigned a, unsigned b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });

  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in verts
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[verts[j]] == color[verts[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  // perm[k] = original vertex placed at canonical position k
  std::vector<unsigned> perm(verts);
  std::string best;
  auto emit = [&]() {
    std::string key(n * 2, '\0');
    for (unsigned k = 0; k < n; ++k) {
      std::uint16_t row = 0;
      for (unsigned m = 0; m < n; ++m)
        if (leq(perm[m], perm[k])) row |= static_cast<std::uint16_t>(1u << m);
      key[2 * k] = static_cast<char>(row & 0xff);
      key[2 * k + 1] = static_cast<char>(row >> 8);
    }
    if (best.empty() || key < best) best = std::move(key);
  };

  // iterate the cartesian product of within-group permutations
  std::vector<std::vector<unsigned>> group_elems;
  for (auto [b, e] : groups)
    group_elems.emplace_back(verts.begin() + static_cast<long>(b),
                             verts.begin() + static_cast<long>(e));
  auto rec = [&](auto&& self, std::size_t g) -> void {
    if (g == groups.size()) { emit(); return; }
    auto& elems = group_elems[g];
    std::sort(elems.begin(), elems.end());
    do {
      std::copy(elems.begin(), elems.end(), perm.begin() + static_cast<long>(groups[g].first));
      self(self, g + 1);
    } while (std::next_permutation(elems.begin(), elems.end()));
  };
  rec(rec, 0);
  return best;
}

std::string canonical_key(const Lattice& l) {
  if (l.size() > 16) throw std::invalid_argument("canonical_key supports at most 16 elements");
  unsigned n = static_cast<unsigned>(l.size());
  std::vector<std::uint16_t> down(n, 0);
  for (ElementId y = 0; y < n; ++y)
    for (ElementId x = 0; x < n; ++x)
      if (l.leq(x, y)) down[y] |= static_cast<std::uint16_t>(1u << x);
  return canonical_order_key(n, down);
}

bool is_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  auto leq_a = [&](std::size_t x, std::size_t y) { return a.leq(static_cast<ElementId>(x), static_cast<ElementId>(y)); };
  auto leq_b = [&](std::size_t x, std::size_t y) { return b.leq(static_cast<ElementId>(x), static_cast<ElementId>(y)); };
  std::vector<int> ca = refine_colors(n, leq_a);
  std::vector<int> cb = refine_colors(n, leq_b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // backtracking assignment of a-vertices to same-colour b-vertices,
  // preserving comparability both ways
  std::vector<ElementId> map(n, kNone);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t x) -> bool {
    if (x == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || cb[y] != ca[x]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < x && ok; ++p) {
        if (leq_a(p, x) != leq_b(map[p], y)) ok = false;
        if (ok && leq_a(x, p) != leq_b(y, map[p])) ok = false;
      }
      if (!ok) continue;
      map[x] = static_cast<ElementId>(y);
      used[y] = true;
      if (self(self, x + 1)) return true;
      used[y] = false;
      map[x] = kNone;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace relcomp
