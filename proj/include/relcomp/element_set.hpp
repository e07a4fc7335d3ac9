#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

#include "relcomp/errors.hpp"

namespace relcomp {

class Lattice;

/// Index into the element table of one particular lattice.
using ElementId = unsigned;
inline constexpr ElementId kNone = static_cast<ElementId>(-1);

/// Subset of a lattice's elements, backed by a fixed-width bit vector.
/// Membership tests are O(1); iteration is by ascending ElementId.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(const Lattice& universe);
  static ElementSet full_of(const Lattice& universe);

  const Lattice* universe() const { return universe_; }

  bool contains(ElementId x) const {
    return (bits_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(ElementId x) { bits_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(ElementId x) { bits_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (std::uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ElementSet& other) const {
    require_same(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    require_same(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & other.bits_[i]) return true;
    return false;
  }

  ElementSet operator&(const ElementSet& other) const {
    require_same(other);
    ElementSet r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= other.bits_[i];
    return r;
  }
  ElementSet operator|(const ElementSet& other) const {
    require_same(other);
    ElementSet r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= other.bits_[i];
    return r;
  }
  ElementSet& operator&=(const ElementSet& other) {
    require_same(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    require_same(other);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
  }
  /// Members of this set that are not members of other.
  ElementSet minus(const ElementSet& other) const {
    require_same(other);
    ElementSet r(*this);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~other.bits_[i];
    return r;
  }

  bool operator==(const ElementSet& other) const {
    return universe_ == other.universe_ && bits_ == other.bits_;
  }
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

  ElementId first() const {
    for (std::size_t w = 0; w < bits_.size(); ++w)
      if (bits_[w]) return static_cast<ElementId>((w << 6) + std::countr_zero(bits_[w]));
    return kNone;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        fn(static_cast<ElementId>((w << 6) + std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  std::vector<ElementId> to_vector() const {
    std::vector<ElementId> v;
    v.reserve(size());
    for_each([&](ElementId x) { v.push_back(x); });
    return v;
  }

 private:
  friend class Lattice;
  void require_same(const ElementSet& other) const {
    if (universe_ == nullptr || universe_ != other.universe_)
      throw UniverseMismatch("element sets belong to different lattices");
  }

  const Lattice* universe_ = nullptr;
  std::vector<std::uint64_t> bits_;  // tail bits past the universe size stay zero
};

/// Ascending-id lexicographic order: the set owning the smallest
/// non-shared element comes first. Total order for equal universes.
bool lex_less(const ElementSet& a, const ElementSet& b);

/// Throws UniverseMismatch unless both sets live over the same lattice.
void require_same_universe(const ElementSet& a, const ElementSet& b);

}  // namespace relcomp
