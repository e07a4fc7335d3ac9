#include "relcomp/element_set.hpp"

#include <algorithm>

#include "relcomp/lattice.hpp"

namespace relcomp {

ElementSet::ElementSet(const Lattice& universe)
    : universe_(&universe), bits_((universe.size() + 63) / 64, 0) {}

ElementSet ElementSet::full_of(const Lattice& universe) {
  ElementSet s(universe);
  std::size_t n = universe.size();
  for (std::size_t w = 0; w < s.bits_.size(); ++w) s.bits_[w] = ~std::uint64_t{0};
  if (n % 64) s.bits_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  require_same_universe(a, b);
  auto va = a.to_vector();
  auto vb = b.to_vector();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

void require_same_universe(const ElementSet& a, const ElementSet& b) {
  if (a.universe() == nullptr || a.universe() != b.universe())
    throw UniverseMismatch("element sets belong to different lattices");
}

}  // namespace relcomp
