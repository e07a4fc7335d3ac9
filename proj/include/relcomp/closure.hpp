#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relcomp/complement.hpp"
#include "relcomp/lattice.hpp"

namespace relcomp {

/// (A^{ab})^{ab}: two applications of the relative-complement operator.
/// The operator pair is a Galois connection, so this is a closure operator
/// on subsets of the interval.
ElementSet closure(const Interval& iv, const ElementSet& a);

/// A <=1 B: every member of A lies below some member of B.
bool le1(const ElementSet& a, const ElementSet& b);
/// A =1 B: A <=1 B and B <=1 A.
bool eq1(const ElementSet& a, const ElementSet& b);

/*
 * The family of closed subsets of an interval [a,b] with a < b, i.e. the
 * image of the operator A -> A^{ab}. Ordered by inclusion it is a bounded
 * lattice with meet = intersection, and A -> A^{ab} restricts to an
 * order-reversing involution with A ^ ortho(A) = {}: an ortholattice.
 *
 * The family is enumerated without touching all 2^|I| subsets: since
 * A^{ab} is the intersection of x^{ab} over x in A, the sets x^{ab}
 * together with {}^{ab} and [a,b]^{ab} generate the whole image under
 * intersection. Construction verifies the ortholattice axioms and raises
 * on any violation.
 */
class ClosedFamily {
 public:
  const Interval& interval() const { return interval_; }
  std::size_t size() const { return sets_.size(); }
  /// Closed sets sorted by (cardinality, then ascending-id lexicographic).
  const ElementSet& at(std::size_t i) const { return sets_[i]; }
  std::size_t ortho(std::size_t i) const { return ortho_[i]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * sets_.size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * sets_.size() + j]; }
  std::optional<std::size_t> index_of(const ElementSet& s) const;
  std::size_t bottom_index() const { return 0; }                 // {}
  std::size_t top_index() const { return sets_.size() - 1; }     // [a,b]

 private:
  friend ClosedFamily closed_family(const Interval& iv);
  explicit ClosedFamily(Interval iv) : interval_(std::move(iv)) {}
  void verify_axioms() const;

  Interval interval_;
  std::vector<ElementSet> sets_;
  std::vector<std::size_t> ortho_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
};

/// Raises DegenerateInterval when a = b.
ClosedFamily closed_family(const Interval& iv);

}  // namespace relcomp
