#include "relcomp/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "relcomp/isomorphism.hpp"

namespace relcomp {

namespace {

// Meet-semilattice with bottom on at most 8 points; down[i] is the bitmask
// of everything <= i, including i itself.
struct SmallOrder {
  unsigned n = 0;
  std::array<std::uint16_t, 8> down{};
};

std::string key_of(const SmallOrder& p) {
  std::vector<std::uint16_t> rows(p.down.begin(), p.down.begin() + p.n);
  return canonical_order_key(p.n, rows);
}

// Valid strict down-sets for one new maximal element: down-closed, and for
// every existing x the set D & down(x) must have a unique greatest member,
// so the new meets exist.
bool valid_extension(const SmallOrder& p, std::uint16_t d) {
  if (d == 0) return false;
  for (unsigned x = 0; x < p.n; ++x) {
    if ((d >> x) & 1) {
      if ((p.down[x] & ~d) != 0) return false;  // not down-closed
      continue;
    }
    std::uint16_t common = d & p.down[x];
    if (common == 0) return false;  // no shared lower bound with x
    bool has_greatest = false;
    for (unsigned y = 0; y < p.n && !has_greatest; ++y)
      if (((common >> y) & 1) && (common & ~p.down[y]) == 0) has_greatest = true;
    if (!has_greatest) return false;
  }
  return true;
}

std::vector<SmallOrder> grow(const std::vector<SmallOrder>& layer) {
  std::vector<SmallOrder> next;
  std::unordered_set<std::string> seen;
  for (const SmallOrder& p : layer) {
    std::uint16_t all = static_cast<std::uint16_t>((1u << p.n) - 1);
    for (std::uint16_t d = 1; d <= all; ++d) {
      if (!valid_extension(p, d)) continue;
      SmallOrder q;
      q.n = p.n + 1;
      q.down = p.down;
      q.down[p.n] = static_cast<std::uint16_t>(d | (1u << p.n));
      if (seen.insert(key_of(q)).second) next.push_back(q);
    }
  }
  return next;
}

Lattice realize(const SmallOrder& p, unsigned index) {
  std::vector<std::string> names(p.n);
  for (unsigned i = 0; i < p.n; ++i) names[i] = "x" + std::to_string(i);
  // covers: x < y with nothing strictly between
  std::vector<std::pair<std::string, std::string>> covers;
  for (unsigned y = 0; y < p.n; ++y)
    for (unsigned x = 0; x < p.n; ++x) {
      if (x == y || !((p.down[y] >> x) & 1)) continue;
      std::uint16_t between = static_cast<std::uint16_t>(
          p.down[y] & ~p.down[x] & ~(1u << y));
      bool cover = true;
      for (unsigned z = 0; z < p.n && cover; ++z)
        if (((between >> z) & 1) && ((p.down[z] >> x) & 1)) cover = false;
      if (cover) covers.emplace_back(names[x], names[y]);
    }
  std::string name = "L" + std::to_string(p.n) + "." + std::to_string(index);
  return Lattice::from_covers(std::move(name), names, covers);
}

}  // namespace

std::vector<Lattice> enumerate_lattices(unsigned n) {
  if (n < 1 || n > 8)
    throw SizeBound("enumeration supports sizes 1 through 8, got " + std::to_string(n));

  std::vector<SmallOrder> layer;
  {
    SmallOrder one;
    one.n = 1;
    one.down[0] = 1;
    layer.push_back(one);
  }
  for (unsigned size = 1; size < n; ++size) layer = grow(layer);

  // keep the ones with a unique greatest element: meet-semilattices with a
  // top are lattices
  std::vector<std::pair<std::string, SmallOrder>> keyed;
  std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
  for (const SmallOrder& p : layer) {
    unsigned tops = 0;
    for (unsigned x = 0; x < n; ++x)
      if (p.down[x] == all) ++tops;
    if (tops == 1) keyed.emplace_back(key_of(p), p);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Lattice> out;
  out.reserve(keyed.size());
  for (std::size_t i = 0; i < keyed.size(); ++i)
    out.push_back(realize(keyed[i].second, static_cast<unsigned>(i)));
  return out;
}

EnumerationRun run_suite(unsigned max_size, const std::vector<std::string>& statement_patterns,
                         bool parallel) {
  EnumerationRun run;
  run.max_size = max_size;
  auto statements = resolve_statements(statement_patterns);
  for (const StatementInfo* st : statements) run.statements.push_back(st->id);

  std::vector<Lattice> all;
  for (unsigned size = 1; size <= max_size; ++size) {
    std::vector<Lattice> layer = enumerate_lattices(size);
    run.count_by_size[size] = layer.size();
    for (Lattice& l : layer) all.push_back(std::move(l));
  }

  std::vector<std::vector<CheckReport>> results(all.size());
  const bool use_parallel = parallel;
  (void)use_parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (use_parallel)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(all.size()); ++i) {
    auto& mine = results[static_cast<std::size_t>(i)];
    mine.reserve(statements.size());
    for (const StatementInfo* st : statements)
      mine.push_back(check_statement(all[static_cast<std::size_t>(i)], *st));
  }

  for (const auto& reports : results)
    for (const CheckReport& rep : reports) {
      run.checked_instances += rep.checked;
      if (!rep.holds()) run.failures.push_back(rep);
    }
  return run;
}

}  // namespace relcomp
