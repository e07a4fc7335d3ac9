#include "relcomp/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace relcomp {

namespace {

inline void set_bit(std::vector<std::uint64_t>& rows, std::size_t words,
                    std::size_t x, std::size_t y) {
  rows[x * words + (y >> 6)] |= std::uint64_t{1} << (y & 63);
}

inline bool get_bit(const std::vector<std::uint64_t>& rows, std::size_t words,
                    std::size_t x, std::size_t y) {
  return (rows[x * words + (y >> 6)] >> (y & 63)) & 1u;
}

std::string element_label(const Lattice& l, ElementId x) {
  return l.element_name(x);
}

}  // namespace

std::optional<ElementId> Lattice::find(std::string_view element_name) const {
  auto it = index_.find(std::string(element_name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Lattice::require(std::string_view element_name) const {
  auto id = find(element_name);
  if (!id) throw UnknownElement("unknown element '" + std::string(element_name) + "'");
  return *id;
}

ElementSet Lattice::up_set(ElementId x) const {
  ElementSet s(*this);
  for (std::size_t w = 0; w < words_; ++w) s.bits_[w] = up_[x * words_ + w];
  return s;
}

ElementSet Lattice::down_set(ElementId x) const {
  ElementSet s(*this);
  for (std::size_t w = 0; w < words_; ++w) s.bits_[w] = down_[x * words_ + w];
  return s;
}

ElementSet Lattice::singleton(ElementId x) const {
  ElementSet s(*this);
  s.insert(x);
  return s;
}

void Lattice::build_index() {
  index_.reserve(names_.size());
  for (ElementId i = 0; i < names_.size(); ++i) index_[names_[i]] = i;
}

void Lattice::transpose_up_to_down() {
  down_.assign(n_ * words_, 0);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (get_bit(up_, words_, x, y)) set_bit(down_, words_, y, x);
}

void Lattice::locate_bounds() {
  std::vector<ElementId> minimal, maximal;
  for (ElementId x = 0; x < n_; ++x) {
    std::size_t below = 0, above = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      below += static_cast<std::size_t>(std::popcount(down_[x * words_ + w]));
      above += static_cast<std::size_t>(std::popcount(up_[x * words_ + w]));
    }
    if (below == 1) minimal.push_back(x);
    if (above == 1) maximal.push_back(x);
  }
  if (minimal.size() != 1)
    throw NoBounds("no unique least element (" + std::to_string(minimal.size()) +
                   " minimal elements)");
  if (maximal.size() != 1)
    throw NoBounds("no unique greatest element (" + std::to_string(maximal.size()) +
                   " maximal elements)");
  bottom_ = minimal.front();
  top_ = maximal.front();
}

void Lattice::synthesize_tables() {
  join_.assign(n_ * n_, 0);
  meet_.assign(n_ * n_, 0);
  std::vector<std::uint64_t> bounds(words_);
  // For each pair, the set of common upper bounds and its least member.
  // Pairs are scanned ascending so the first failure is deterministic.
  for (std::size_t x = 0; x < n_; ++x) {
    for (std::size_t y = x; y < n_; ++y) {
      for (std::size_t w = 0; w < words_; ++w)
        bounds[w] = up_[x * words_ + w] & up_[y * words_ + w];
      ElementId least = kNone;
      for (std::size_t w = 0; w < words_ && least == kNone; ++w) {
        std::uint64_t word = bounds[w];
        while (word) {
          std::size_t u = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
          word &= word - 1;
          bool is_least = true;
          for (std::size_t v = 0; v < words_; ++v)
            if (bounds[v] & ~up_[u * words_ + v]) { is_least = false; break; }
          if (is_least) { least = static_cast<ElementId>(u); break; }
        }
      }
      if (least == kNone)
        throw NotALattice("elements '" + names_[x] + "' and '" + names_[y] +
                              "' have no least upper bound",
                          static_cast<unsigned>(x), static_cast<unsigned>(y));
      join_[x * n_ + y] = join_[y * n_ + x] = static_cast<std::uint16_t>(least);

      for (std::size_t w = 0; w < words_; ++w)
        bounds[w] = down_[x * words_ + w] & down_[y * words_ + w];
      ElementId greatest = kNone;
      for (std::size_t w = words_; w-- > 0 && greatest == kNone;) {
        std::uint64_t word = bounds[w];
        while (word) {
          std::size_t u = (w << 6) + 63 - static_cast<std::size_t>(std::countl_zero(word));
          word &= ~(std::uint64_t{1} << (u & 63));
          bool is_greatest = true;
          for (std::size_t v = 0; v < words_; ++v)
            if (bounds[v] & ~down_[u * words_ + v]) { is_greatest = false; break; }
          if (is_greatest) { greatest = static_cast<ElementId>(u); break; }
        }
      }
      if (greatest == kNone)
        throw NotALattice("elements '" + names_[x] + "' and '" + names_[y] +
                              "' have no greatest lower bound",
                          static_cast<unsigned>(x), static_cast<unsigned>(y));
      meet_[x * n_ + y] = meet_[y * n_ + x] = static_cast<std::uint16_t>(greatest);
    }
  }
}

void Lattice::derive_covers() {
  covers_.clear();
  std::vector<std::uint64_t> strict(words_);
  for (ElementId x = 0; x < n_; ++x) {
    for (ElementId y = 0; y < n_; ++y) {
      if (x == y || !leq(x, y)) continue;
      // y covers x iff nothing lies strictly between
      bool cover = true;
      for (std::size_t w = 0; w < words_ && cover; ++w) {
        std::uint64_t between = up_[x * words_ + w] & down_[y * words_ + w];
        if (w == (x >> 6)) between &= ~(std::uint64_t{1} << (x & 63));
        if (w == (y >> 6)) between &= ~(std::uint64_t{1} << (y & 63));
        if (between) cover = false;
      }
      if (cover) covers_.emplace_back(x, y);
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

Lattice Lattice::from_order(std::string name, std::vector<std::string> names,
                            std::vector<std::uint64_t> up, Kind kind) {
  Lattice l;
  l.name_ = std::move(name);
  l.names_ = std::move(names);
  l.n_ = l.names_.size();
  l.words_ = (l.n_ + 63) / 64;
  l.up_ = std::move(up);
  l.kind_ = kind;
  l.transpose_up_to_down();
  l.locate_bounds();
  l.synthesize_tables();
  l.derive_covers();
  l.build_index();
  return l;
}

Lattice Lattice::from_covers(std::string name,
                             const std::vector<std::string>& element_names,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
  if (element_names.empty())
    throw std::invalid_argument("element list is empty");
  if (element_names.size() > kMaxElements)
    throw SizeOverflow("lattice exceeds " + std::to_string(kMaxElements) + " elements");

  std::unordered_map<std::string, ElementId> index;
  index.reserve(element_names.size());
  for (ElementId i = 0; i < element_names.size(); ++i) {
    if (!index.emplace(element_names[i], i).second)
      throw std::invalid_argument("duplicate element name '" + element_names[i] + "'");
  }

  std::size_t n = element_names.size();
  std::vector<std::vector<ElementId>> succ(n);
  std::vector<unsigned> indeg(n, 0);
  for (const auto& [lo, hi] : covers) {
    auto li = index.find(lo);
    auto hi_it = index.find(hi);
    if (li == index.end()) throw std::invalid_argument("unknown element '" + lo + "' in cover");
    if (hi_it == index.end()) throw std::invalid_argument("unknown element '" + hi + "' in cover");
    if (li->second == hi_it->second)
      throw CycleError("cover relates '" + lo + "' to itself");
    succ[li->second].push_back(hi_it->second);
    ++indeg[hi_it->second];
  }

  // Kahn topological sort; leftovers mean a cycle.
  std::vector<ElementId> order;
  order.reserve(n);
  std::queue<ElementId> ready;
  for (ElementId x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  auto deg = indeg;
  while (!ready.empty()) {
    ElementId x = ready.front();
    ready.pop();
    order.push_back(x);
    for (ElementId y : succ[x])
      if (--deg[y] == 0) ready.push(y);
  }
  if (order.size() != n) throw CycleError("cover relation contains a cycle");

  // Reflexive-transitive closure, processed against the topological order.
  std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> up(n * words, 0);
  for (std::size_t i = order.size(); i-- > 0;) {
    ElementId x = order[i];
    set_bit(up, words, x, x);
    for (ElementId y : succ[x])
      for (std::size_t w = 0; w < words; ++w) up[x * words + w] |= up[y * words + w];
  }

  return from_order(std::move(name), element_names, std::move(up), Kind::General);
}

Interval::Interval(const Lattice& lattice, ElementId a, ElementId b)
    : lattice_(&lattice), a_(a), b_(b), members_(lattice) {
  if (!lattice.leq(a, b))
    throw NotComparable("'" + element_label(lattice, a) + "' is not below '" +
                        element_label(lattice, b) + "'");
  members_ = lattice.up_set(a) & lattice.down_set(b);
  list_ = members_.to_vector();
}

Interval interval(const Lattice& lattice, ElementId a, ElementId b) {
  return Interval(lattice, a, b);
}

Lattice make_boolean(unsigned n) {
  if (n > 12) throw SizeOverflow("boolean algebra with 2^" + std::to_string(n) + " elements");
  std::size_t size = std::size_t{1} << n;
  std::vector<std::string> names(size);
  for (std::size_t m = 0; m < size; ++m) names[m] = std::to_string(m);

  Lattice l;
  l.name_ = "B" + std::to_string(n);
  l.names_ = std::move(names);
  l.n_ = size;
  l.words_ = (size + 63) / 64;
  l.up_.assign(size * l.words_, 0);
  l.kind_ = Lattice::Kind::Boolean;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y)
      if ((x & y) == x) set_bit(l.up_, l.words_, x, y);
  l.join_.resize(size * size);
  l.meet_.resize(size * size);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      l.join_[x * size + y] = static_cast<std::uint16_t>(x | y);
      l.meet_[x * size + y] = static_cast<std::uint16_t>(x & y);
    }
  l.transpose_up_to_down();
  l.locate_bounds();
  l.derive_covers();
  l.build_index();
  return l;
}

Lattice make_mn(unsigned n) {
  if (n < 3) throw MnTooSmall("M_n requires n >= 3, got " + std::to_string(n));
  std::size_t size = n + 2;
  if (size > Lattice::kMaxElements) throw SizeOverflow("M_n too large");
  std::vector<std::string> names;
  names.reserve(size);
  names.emplace_back("0");
  for (unsigned i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  names.emplace_back("1");
  ElementId bot = 0, top = static_cast<ElementId>(size - 1);

  Lattice l;
  l.name_ = "M" + std::to_string(n);
  l.names_ = std::move(names);
  l.n_ = size;
  l.words_ = (size + 63) / 64;
  l.up_.assign(size * l.words_, 0);
  l.kind_ = Lattice::Kind::Mn;
  for (std::size_t x = 0; x < size; ++x) {
    set_bit(l.up_, l.words_, x, x);
    set_bit(l.up_, l.words_, x, top);
    set_bit(l.up_, l.words_, bot, x);
  }
  l.join_.resize(size * size);
  l.meet_.resize(size * size);
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = 0; y < size; ++y) {
      std::uint16_t j, m;
      if (x == y) { j = m = static_cast<std::uint16_t>(x); }
      else if (x == bot) { j = static_cast<std::uint16_t>(y); m = static_cast<std::uint16_t>(bot); }
      else if (y == bot) { j = static_cast<std::uint16_t>(x); m = static_cast<std::uint16_t>(bot); }
      else if (x == top || y == top) { j = static_cast<std::uint16_t>(top); m = static_cast<std::uint16_t>(x == top ? y : x); }
      else { j = static_cast<std::uint16_t>(top); m = static_cast<std::uint16_t>(bot); }
      l.join_[x * size + y] = j;
      l.meet_[x * size + y] = m;
    }
  l.transpose_up_to_down();
  l.locate_bounds();
  l.derive_covers();
  l.build_index();
  return l;
}

Lattice make_chain(unsigned k) {
  if (k == 0) throw std::invalid_argument("chain needs at least one element");
  if (k > Lattice::kMaxElements) throw SizeOverflow("chain too large");
  std::vector<std::string> names(k);
  for (unsigned i = 0; i < k; ++i) names[i] = std::to_string(i);

  Lattice l;
  l.name_ = "C" + std::to_string(k);
  l.names_ = std::move(names);
  l.n_ = k;
  l.words_ = (k + 63) / 64;
  l.up_.assign(k * l.words_, 0);
  l.kind_ = Lattice::Kind::Chain;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x; y < k; ++y) set_bit(l.up_, l.words_, x, y);
  l.join_.resize(std::size_t{k} * k);
  l.meet_.resize(std::size_t{k} * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      l.join_[x * k + y] = static_cast<std::uint16_t>(std::max(x, y));
      l.meet_[x * k + y] = static_cast<std::uint16_t>(std::min(x, y));
    }
  l.transpose_up_to_down();
  l.locate_bounds();
  l.derive_covers();
  l.build_index();
  return l;
}

Lattice direct_product(std::span<const Lattice> factors) {
  if (factors.empty()) throw std::invalid_argument("product of zero lattices");
  std::size_t size = 1;
  for (const Lattice& f : factors) {
    if (size > Lattice::kMaxElements / f.size())
      throw SizeOverflow("product exceeds " + std::to_string(Lattice::kMaxElements) +
                         " elements");
    size *= f.size();
  }

  std::size_t k = factors.size();
  // strides: first factor slowest, last fastest
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * factors[i].size();

  auto component = [&](std::size_t id, std::size_t i) -> ElementId {
    return static_cast<ElementId>(id / stride[i] % factors[i].size());
  };

  std::vector<std::string> names(size);
  std::string prod_name;
  for (std::size_t i = 0; i < k; ++i) {
    if (i) prod_name += "·";
    prod_name += factors[i].name();
  }
  for (std::size_t id = 0; id < size; ++id) {
    std::string n;
    for (std::size_t i = 0; i < k; ++i) {
      if (i) n += "·";
      n += factors[i].element_name(component(id, i));
    }
    names[id] = std::move(n);
  }

  Lattice l;
  l.name_ = std::move(prod_name);
  l.names_ = std::move(names);
  l.n_ = size;
  l.words_ = (size + 63) / 64;
  l.up_.assign(size * l.words_, 0);
  l.kind_ = k == 1 ? factors[0].kind() : Lattice::Kind::General;
  l.join_.resize(size * size);
  l.meet_.resize(size * size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      bool below = true;
      std::size_t j = 0, m = 0;
      for (std::size_t i = 0; i < k; ++i) {
        ElementId cx = component(x, i), cy = component(y, i);
        if (!factors[i].leq(cx, cy)) below = false;
        j += static_cast<std::size_t>(factors[i].join(cx, cy)) * stride[i];
        m += static_cast<std::size_t>(factors[i].meet(cx, cy)) * stride[i];
      }
      if (below) set_bit(l.up_, l.words_, x, y);
      l.join_[x * size + y] = static_cast<std::uint16_t>(j);
      l.meet_[x * size + y] = static_cast<std::uint16_t>(m);
    }
  }
  l.transpose_up_to_down();
  l.locate_bounds();
  l.derive_covers();
  l.build_index();
  return l;
}

ElementSet join_set(const ElementSet& a, const ElementSet& b) {
  require_same_universe(a, b);
  const Lattice& l = *a.universe();
  ElementSet r(l);
  a.for_each([&](ElementId x) {
    b.for_each([&](ElementId y) { r.insert(l.join(x, y)); });
  });
  return r;
}

ElementSet meet_set(const ElementSet& a, const ElementSet& b) {
  require_same_universe(a, b);
  const Lattice& l = *a.universe();
  ElementSet r(l);
  a.for_each([&](ElementId x) {
    b.for_each([&](ElementId y) { r.insert(l.meet(x, y)); });
  });
  return r;
}

ElementSet join_set(const ElementSet& a, ElementId y) {
  const Lattice& l = *a.universe();
  ElementSet r(l);
  a.for_each([&](ElementId x) { r.insert(l.join(x, y)); });
  return r;
}

ElementSet meet_set(const ElementSet& a, ElementId y) {
  const Lattice& l = *a.universe();
  ElementSet r(l);
  a.for_each([&](ElementId x) { r.insert(l.meet(x, y)); });
  return r;
}

bool is_modular(const Lattice& l) {
  std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId z = 0; z < n; ++z) {
      if (!l.leq(x, z)) continue;
      for (ElementId y = 0; y < n; ++y)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
    }
  return true;
}

bool is_distributive(const Lattice& l) {
  std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
  return true;
}

bool is_complemented(const Lattice& l) {
  std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x) {
    bool found = false;
    for (ElementId y = 0; y < n && !found; ++y)
      if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) found = true;
    if (!found) return false;
  }
  return true;
}

bool is_complemented(const Interval& iv) {
  const Lattice& l = iv.lattice();
  for (ElementId x : iv.member_list()) {
    bool found = false;
    for (ElementId y : iv.member_list())
      if (l.join(x, y) == iv.upper() && l.meet(x, y) == iv.lower()) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

bool is_rel_complemented(const Lattice& l) {
  for (auto [a, b] : comparable_pairs(l))
    if (!is_complemented(Interval(l, a, b))) return false;
  return true;
}

bool is_modular(const Interval& iv) {
  const Lattice& l = iv.lattice();
  const auto& m = iv.member_list();
  for (ElementId x : m)
    for (ElementId z : m) {
      if (!l.leq(x, z)) continue;
      for (ElementId y : m)
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return false;
    }
  return true;
}

bool is_antichain(const ElementSet& s) {
  const Lattice& l = *s.universe();
  auto v = s.to_vector();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (l.leq(v[i], v[j]) || l.leq(v[j], v[i])) return false;
  return true;
}

bool is_convex(const ElementSet& s) {
  const Lattice& l = *s.universe();
  auto v = s.to_vector();
  for (ElementId d : v)
    for (ElementId e : v) {
      if (!l.leq(d, e)) continue;
      ElementSet between = l.up_set(d) & l.down_set(e);
      bool ok = between.subset_of(s);
      if (!ok) return false;
    }
  return true;
}

std::optional<std::array<ElementId, 5>> find_n5_through(const Interval& iv) {
  const Lattice& l = iv.lattice();
  ElementId a = iv.lower(), b = iv.upper();
  const auto& m = iv.member_list();
  if (m.size() < 5) return std::nullopt;
  for (ElementId d : m) {
    if (d == a || d == b) continue;
    for (ElementId e : m) {
      if (e == a || e == b || e == d) continue;
      if (l.meet(d, e) != a || l.join(d, e) != b) continue;
      for (ElementId f : m) {
        if (f == a || f == b || f == d || f == e) continue;
        if (!l.lt(e, f)) continue;
        if (l.meet(d, f) == a && l.join(d, f) == b)
          return std::array<ElementId, 5>{a, d, e, f, b};
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<ElementId, ElementId>> comparable_pairs(const Lattice& l) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace relcomp
