#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relcomp/closure.hpp"
#include "relcomp/complement.hpp"
#include "relcomp/lattice.hpp"

namespace relcomp {

enum class CheckStatus {
  Verified,  // hypotheses met, statement checked on >= 1 instance, no violation
  Refuted,   // counterexample found (build-failing on honest inputs)
  Vacuous,   // hypotheses not met or nothing to check; note says why
};

/// Structured counterexample. Roles are named so the witness can be
/// re-evaluated independently of the run that produced it.
struct Witness {
  std::string lattice;
  std::optional<std::pair<ElementId, ElementId>> interval;
  std::vector<std::pair<std::string, ElementId>> elements;
  std::vector<std::pair<std::string, std::vector<ElementId>>> sets;
  std::string detail;
};

struct CheckReport {
  std::string statement;
  CheckStatus status = CheckStatus::Vacuous;
  long long checked = 0;  // instances actually evaluated
  std::string note;
  std::optional<Witness> counterexample;

  bool holds() const { return status != CheckStatus::Refuted; }
};

/// Folds a per-interval (or per-lattice) report into an aggregate:
/// refutations dominate and keep their first counterexample, otherwise any
/// verified instance wins over vacuity; checked counts accumulate.
void merge_report(CheckReport& aggregate, const CheckReport& one);

// --- Galois-connection laws, per complemented interval with a < b ---------
CheckReport verify_galois_extensive(const Interval& iv);   // A in (A^{ab})^{ab}
CheckReport verify_galois_antitone(const Interval& iv);    // A in B => B^{ab} in A^{ab}
CheckReport verify_galois_idempotent(const Interval& iv);  // triple application collapses
CheckReport verify_galois_adjunction(const Interval& iv);  // A in B^{ab} iff B in A^{ab}
CheckReport verify_galois_nonempty(const Interval& iv);    // closure of nonempty is nonempty

// --- Properties of the relative-complement operator ------------------------
/// c in (c^{ab})^{ab} and ((c^{ab})^{ab})^{ab} = c^{ab} for every member.
CheckReport verify_closure_triple(const Interval& iv);
/// Every x^{ab} is an antichain iff no pentagon sublattice spans the interval.
CheckReport verify_antichain_iff_n5(const Interval& iv);
/// Every c^{ab} is convex.
CheckReport verify_convexity(const Interval& iv);
/// If x -> (x^{ab})^{ab} is not injective, the identity (x^{ab})^{ab} = x fails.
CheckReport verify_injectivity_identity(const Interval& iv);
/// On modular complemented intervals, A^{ab} and (c^{ab})^{ab} are antichains.
CheckReport verify_modular_antichain(const Interval& iv);

/// Descends (c^{ab})^{ab} > (c1^{ab})^{ab} > ... until it hits a d with
/// ({d}^{ab})^{ab} = {d}; requires the biclosure map to be injective and the
/// interval complemented.
ElementId find_biclosure_fixed_point(const Interval& iv, ElementId c);
/// Suite form: checks the contract of find_biclosure_fixed_point for every
/// member where the hypotheses hold.
CheckReport verify_fixed_point(const Interval& iv);

/// Implication graph among the six <=1 conditions relating x^{ab}, y^{ab}
/// to (x ^ y)^{ab} and (x v y)^{ab}.
CheckReport verify_le1_theorem(const Interval& iv);

/// Induced-element equivalence: over all z in the interval and all ambient
/// u satisfying cond1, v = (u v x) ^ y lies in z^{xy} iff cond2 holds.
CheckReport verify_prop3(const Interval& iv);
/// In modular lattices cond1 holds for every interval and every u.
CheckReport verify_prop3_modular(const Lattice& lattice);

/// On modular complemented intervals the identity (x^{ab})^{ab} = x is
/// equivalent to: for every x and every y in (x^{ab})^{ab} some z in y^{ab}
/// has (x v y) ^ z = a or (x ^ y) v z = b.
CheckReport verify_th2(const Interval& iv);

/// Direct products of one Boolean algebra with any number of M_n's satisfy
/// the closure identity and bar = hat = c^{ab} on every interval. Factors
/// must be constructor-tagged; anything else raises BadFactors.
CheckReport verify_th1(std::span<const Lattice> factors, bool parallel = true);

/// Join/meet-preserving injective embedding of a bounded pattern into a
/// target, with the pattern's bounds anchored to the target's bounds.
/// embedding[p] is the target element assigned to pattern element p.
struct PatternMatch {
  const Lattice* pattern = nullptr;
  const Lattice* target = nullptr;
  std::vector<ElementId> embedding;
};

/// All anchored occurrences of the pattern, one match per image sublattice
/// (embeddings differing only by a pattern automorphism are collapsed;
/// the representative is the lexicographically least embedding).
/// Deterministic order by embedding vector.
std::vector<PatternMatch> find_pattern(const Lattice& target, const Lattice& pattern);

/// For every occurrence of the two 9-element patterns: the two marked
/// complements d, e of c induce the same element of [a,b], and that element
/// is a relative complement of c there. Vacuous when nothing matches.
CheckReport verify_remark_patterns(const Lattice& target);

/// The opposite behaviour: for all x < z < y, distinct complements of z
/// induce distinct elements both from below and from above. Not a theorem;
/// the report carries the first coinciding pair when one exists. Even the
/// fig1 fixture refutes it (in [0,g] the comparable complements f < h of b
/// both induce e), though its incomparable complement pairs never coincide.
CheckReport verify_remark_distinct(const Lattice& lattice);

/// Re-evaluates a refuted report's counterexample from scratch. True iff
/// the witness really violates the statement (hypotheses included).
bool witness_violates(const Lattice& lattice, const CheckReport& report);

// --- statement registry -----------------------------------------------------
enum class Scope { PerInterval, PerLattice };

struct StatementInfo {
  const char* id;
  Scope scope;
  const char* summary;
  CheckReport (*interval_fn)(const Interval&);
  CheckReport (*lattice_fn)(const Lattice&);
};

std::span<const StatementInfo> statement_registry();

/// Expands a statement id or a trailing-star pattern ("galois.*") against
/// the registry; empty input means everything. Unknown ids raise.
std::vector<const StatementInfo*> resolve_statements(const std::vector<std::string>& patterns);

/// Runs one statement over a lattice; interval-scoped statements are
/// aggregated over every interval, ascending (a, b).
CheckReport check_statement(const Lattice& lattice, const StatementInfo& st);

}  // namespace relcomp
