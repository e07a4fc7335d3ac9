#include "relcomp/fixtures.hpp"

namespace relcomp::fixtures {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

Lattice build(const char* name, std::vector<std::string> names, const Covers& covers) {
  return Lattice::from_covers(name, std::move(names), covers);
}

}  // namespace

Lattice fig1() {
  return build("fig1", {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"},
               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"},
                {"0", "e"}, {"a", "f"}, {"b", "g"}, {"c", "h"}, {"d", "1"},
                {"e", "f"}, {"e", "g"}, {"f", "h"}, {"g", "1"}, {"h", "1"}});
}

Lattice fig2() {
  // atoms a..g, coatoms h..n; each coatom covers three atoms and each atom
  // lies under three coatoms
  return build("fig2",
               {"0", "a", "b", "c", "d", "e", "f", "g",
                "h", "i", "j", "k", "l", "m", "n", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"0", "d"}, {"0", "e"}, {"0", "f"},
                {"0", "g"},
                {"a", "h"}, {"a", "i"}, {"a", "j"},
                {"b", "h"}, {"b", "k"}, {"b", "l"},
                {"c", "h"}, {"c", "m"}, {"c", "n"},
                {"d", "i"}, {"d", "k"}, {"d", "m"},
                {"e", "i"}, {"e", "l"}, {"e", "n"},
                {"f", "j"}, {"f", "k"}, {"f", "n"},
                {"g", "j"}, {"g", "l"}, {"g", "m"},
                {"h", "1"}, {"i", "1"}, {"j", "1"}, {"k", "1"}, {"l", "1"}, {"m", "1"},
                {"n", "1"}});
}

Lattice fig4() {
  return build("fig4", {"0", "a", "b", "c", "d", "e", "f", "g", "h", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"},
                {"0", "e"}, {"a", "f"}, {"b", "g"}, {"c", "h"}, {"d", "1"},
                {"e", "f"}, {"e", "g"}, {"e", "h"}, {"f", "1"}, {"g", "1"}, {"h", "1"}});
}

Lattice fig5() {
  return build("fig5", {"0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "1"},
               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "d"}, {"b", "d"}, {"c", "d"},
                {"0", "e"}, {"a", "f"}, {"b", "g"}, {"c", "h"}, {"d", "1"},
                {"e", "f"}, {"e", "g"}, {"e", "h"}, {"e", "i"},
                {"f", "1"}, {"g", "1"}, {"h", "1"}, {"i", "1"}});
}

Lattice fig6_pattern() {
  // roles: d and e are the two complements of c; n is the element they both
  // induce in [a,b]; m = d v e
  return build("fig6-pattern", {"0", "d", "e", "a", "n", "m", "c", "b", "1"},
               {{"0", "d"}, {"0", "e"}, {"0", "a"},
                {"a", "n"}, {"a", "c"},
                {"d", "m"}, {"e", "m"}, {"n", "m"},
                {"n", "b"}, {"c", "b"},
                {"m", "1"}, {"b", "1"}});
}

Lattice fig7_pattern() {
  // dual arrangement: d and e meet b in m, and m v a = n = the shared
  // induced element
  return build("fig7-pattern", {"0", "a", "m", "c", "n", "d", "e", "b", "1"},
               {{"0", "a"}, {"0", "m"},
                {"a", "c"}, {"a", "n"},
                {"m", "e"}, {"m", "d"}, {"m", "n"},
                {"n", "b"}, {"c", "b"},
                {"b", "1"}, {"d", "1"}, {"e", "1"}});
}

Lattice n5() {
  return build("N5", {"0", "a", "b", "c", "1"},
               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"c", "1"}, {"b", "1"}});
}

}  // namespace relcomp::fixtures
