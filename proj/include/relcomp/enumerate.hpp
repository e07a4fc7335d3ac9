#pragma once

#include <map>
#include <string>
#include <vector>

#include "relcomp/lattice.hpp"
#include "relcomp/verify.hpp"

namespace relcomp {

/// One representative per isomorphism class of lattices with exactly n
/// elements, 1 <= n <= 8, ordered by canonical key. Raises SizeBound
/// outside that range.
///
/// Generation grows meet-semilattices one maximal element at a time (every
/// down-set of a lattice is one, so every lattice is reached), rejecting
/// isomorphs by canonical form at each layer and keeping the results with a
/// unique greatest element.
std::vector<Lattice> enumerate_lattices(unsigned n);

struct EnumerationRun {
  unsigned max_size = 0;
  std::map<unsigned, std::size_t> count_by_size;
  std::vector<std::string> statements;       // resolved statement ids, registry order
  long long checked_instances = 0;
  std::vector<CheckReport> failures;         // refuted reports only
};

/// Evaluates the given statements (ids or trailing-star patterns; empty
/// means all) on every lattice of every size up to max_size, each
/// interval-scoped statement over every interval. Lattices are processed
/// concurrently when OpenMP is available and `parallel` is set; the
/// aggregation is deterministic either way.
EnumerationRun run_suite(unsigned max_size, const std::vector<std::string>& statement_patterns,
                         bool parallel = true);

}  // namespace relcomp
