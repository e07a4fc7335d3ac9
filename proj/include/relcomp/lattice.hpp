#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relcomp/element_set.hpp"
#include "relcomp/errors.hpp"

namespace relcomp {

/*
 * Finite bounded lattice over a fixed element table.
 *
 * The order relation is kept as one bit row per element (up-sets and
 * down-sets), and join/meet are total precomputed tables, so every query
 * is a table lookup. Instances are immutable after construction and safe
 * to share between threads.
 */
class Lattice {
 public:
  /// Which constructor produced the lattice. Some checkers only accept
  /// constructor-tagged inputs.
  enum class Kind { General, Boolean, Mn, Chain };

  static constexpr std::size_t kMaxElements = 4096;

  /// Builds a lattice from its Hasse diagram. `covers` lists (lower, upper)
  /// name pairs; the order is the reflexive-transitive closure and the
  /// join/meet tables are synthesized from it. For each pair the set of
  /// common upper bounds is computed and its least member taken; the first
  /// pair (ascending ids) without one raises NotALattice.
  static Lattice from_covers(std::string name,
                             const std::vector<std::string>& element_names,
                             const std::vector<std::pair<std::string, std::string>>& covers);

  std::size_t size() const { return names_.size(); }
  const std::string& name() const { return name_; }
  const std::string& element_name(ElementId x) const { return names_[x]; }
  const std::vector<std::string>& element_names() const { return names_; }

  std::optional<ElementId> find(std::string_view element_name) const;
  /// find(), but raises UnknownElement instead of returning nullopt.
  ElementId require(std::string_view element_name) const;

  bool leq(ElementId x, ElementId y) const {
    return (up_[x * words_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementId join(ElementId x, ElementId y) const { return join_[x * n_ + y]; }
  ElementId meet(ElementId x, ElementId y) const { return meet_[x * n_ + y]; }

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  Kind kind() const { return kind_; }

  /// Transitive reduction of the order, sorted by (lower, upper).
  const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }

  ElementSet up_set(ElementId x) const;    // { y | x <= y }
  ElementSet down_set(ElementId x) const;  // { y | y <= x }
  ElementSet empty_set() const { return ElementSet(*this); }
  ElementSet full_set() const { return ElementSet::full_of(*this); }
  ElementSet singleton(ElementId x) const;

 private:
  friend class ElementSet;
  friend Lattice make_boolean(unsigned n);
  friend Lattice make_mn(unsigned n);
  friend Lattice make_chain(unsigned k);
  friend Lattice direct_product(std::span<const Lattice> factors);

  Lattice() = default;

  // Takes an up-set bit matrix known to be a partial order, finds bounds,
  // synthesizes (or accepts) the operation tables and derives the covers.
  static Lattice from_order(std::string name, std::vector<std::string> names,
                            std::vector<std::uint64_t> up, Kind kind);
  void transpose_up_to_down();
  void locate_bounds();             // throws NoBounds
  void synthesize_tables();         // throws NotALattice
  void derive_covers();
  void build_index();

  std::string name_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;    // n_ rows of words_ words
  std::vector<std::uint64_t> down_;
  std::vector<std::uint16_t> join_;  // n_*n_, entries < n_ <= 4096
  std::vector<std::uint16_t> meet_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
  ElementId bottom_ = kNone;
  ElementId top_ = kNone;
  Kind kind_ = Kind::General;
};

/// Interval [a, b] of a lattice: the universe of the relative operators.
/// Members are join/meet-closed under the ambient operations.
class Interval {
 public:
  Interval(const Lattice& lattice, ElementId a, ElementId b);  // throws NotComparable

  const Lattice& lattice() const { return *lattice_; }
  ElementId lower() const { return a_; }
  ElementId upper() const { return b_; }
  const ElementSet& members() const { return members_; }
  const std::vector<ElementId>& member_list() const { return list_; }
  std::size_t size() const { return list_.size(); }
  bool contains(ElementId x) const { return members_.contains(x); }
  bool degenerate() const { return a_ == b_; }

 private:
  const Lattice* lattice_;
  ElementId a_, b_;
  ElementSet members_;
  std::vector<ElementId> list_;
};

Interval interval(const Lattice& lattice, ElementId a, ElementId b);

/// Powerset lattice of an n-element set, ordered by inclusion (2^n elements).
Lattice make_boolean(unsigned n);
/// Bounds plus n >= 3 pairwise incomparable atoms, each two of them
/// mutual complements. Raises MnTooSmall below 3.
Lattice make_mn(unsigned n);
/// Total order on k >= 1 elements.
Lattice make_chain(unsigned k);
/// Componentwise order, join and meet on tuples; element names are the
/// component names joined by U+00B7. Raises SizeOverflow past 4096 elements.
Lattice direct_product(std::span<const Lattice> factors);

/// Elementwise images {x op y | x in A, y in B}, duplicates collapsed.
ElementSet join_set(const ElementSet& a, const ElementSet& b);
ElementSet meet_set(const ElementSet& a, const ElementSet& b);
ElementSet join_set(const ElementSet& a, ElementId y);
ElementSet meet_set(const ElementSet& a, ElementId y);

bool is_modular(const Lattice& lattice);
bool is_distributive(const Lattice& lattice);
bool is_complemented(const Lattice& lattice);
bool is_rel_complemented(const Lattice& lattice);

/// Modular law restricted to triples of interval members (the interval is a
/// sublattice, so this decides modularity of the sublattice).
bool is_modular(const Interval& iv);
/// Every member of the interval has a relative complement inside it.
bool is_complemented(const Interval& iv);

bool is_antichain(const ElementSet& s);
bool is_convex(const ElementSet& s);

/// Pentagon sublattice spanning the interval: returns (a, d, e, f, b) with
/// a, b the interval bounds, e < f and d the common relative complement of
/// both, or nullopt. First hit in ascending (d, e, f) scan order.
std::optional<std::array<ElementId, 5>> find_n5_through(const Interval& iv);

/// All ordered pairs (a, b) with a <= b, ascending.
std::vector<std::pair<ElementId, ElementId>> comparable_pairs(const Lattice& lattice);

}  // namespace relcomp
