#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "relcomp/fixtures.hpp"
#include "relcomp/io.hpp"

using namespace relcomp;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fixture_path(const char* name) {
  return std::string(RELCOMP_FIXTURE_DIR) + "/" + name;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.name() != b.name() || a.element_names() != b.element_names()) return false;
  if (a.covers() != b.covers()) return false;
  for (ElementId x = 0; x < a.size(); ++x)
    for (ElementId y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(x, y)) return false;
  return true;
}

}  // namespace

TEST_CASE("shipped fixture files match the built-in lattices") {
  struct Row {
    const char* file;
    Lattice builtin;
  };
  std::vector<Row> rows;
  rows.push_back({"fig1.lat", fixtures::fig1()});
  rows.push_back({"fig2.lat", fixtures::fig2()});
  rows.push_back({"fig4.lat", fixtures::fig4()});
  rows.push_back({"fig5.lat", fixtures::fig5()});
  rows.push_back({"fig6-pattern.lat", fixtures::fig6_pattern()});
  rows.push_back({"fig7-pattern.lat", fixtures::fig7_pattern()});
  rows.push_back({"n5.lat", fixtures::n5()});
  rows.push_back({"m3.lat", make_mn(3)});
  rows.push_back({"m4.lat", make_mn(4)});
  for (const Row& row : rows) {
    Lattice parsed = load_lattice_file(fixture_path(row.file));
    CHECK(same_lattice(parsed, row.builtin));
  }
}

TEST_CASE("print and parse round-trip") {
  for (const char* file : {"fig1.lat", "fig2.lat", "fig4.lat", "fig5.lat",
                           "fig6-pattern.lat", "fig7-pattern.lat", "m3.lat", "m4.lat",
                           "n5.lat"}) {
    Lattice l = load_lattice_file(fixture_path(file));
    std::string once = print_lattice(l);
    Lattice reparsed = parse_lattice(once);
    CHECK(same_lattice(l, reparsed));
    CHECK(print_lattice(reparsed) == once);
  }
}

TEST_CASE("parser error reporting") {
  auto line_of = [](const char* text) {
    try {
      parse_lattice(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("") == 1);                      // no elements declared
  CHECK(line_of("# only a comment\n") == 2);    // counts the trailing empty line
  CHECK(line_of("elem a\nelem a\n") == 2);      // duplicate name
  CHECK(line_of("elem a b\ncover a z\n") == 2); // unknown cover name
  CHECK(line_of("elemz a\n") == 1);             // unknown directive
  CHECK(line_of("lattice x\nlattice y\nelem a\n") == 2);
  CHECK(line_of("lattice\nelem a\n") == 1);     // missing name
  CHECK(line_of("elem a b\ncover a\n") == 2);   // cover arity
  CHECK(line_of("elem\n") == 1);                // empty elem line

  // covers may come before their elem line; resolution is deferred
  Lattice l = parse_lattice("cover a b\nelem a b\n");
  CHECK(l.size() == 2);

  // from_covers failures pass through untouched
  CHECK_THROWS_AS(parse_lattice("elem a b\ncover a b\ncover b a\n"), CycleError);
  CHECK_THROWS_AS(parse_lattice("elem a b c\ncover a b\ncover a c\n"), NoBounds);

  CHECK_THROWS_AS(load_lattice_file("/nonexistent/x.lat"), ParseError);
}

TEST_CASE("comments and whitespace") {
  Lattice l = parse_lattice(
      "# header\n"
      "lattice t # trailing comment\n"
      "  elem   a   b  # names\n"
      "cover a b\n"
      "\n");
  CHECK(l.name() == "t");
  CHECK(l.size() == 2);
  CHECK(l.covers().size() == 1);
}

TEST_CASE("dot export") {
  Lattice n5 = fixtures::n5();
  std::string dot = to_dot(n5);
  CHECK(dot ==
        "digraph \"N5\" {\n"
        "  rankdir=BT;\n"
        "  \"0\";\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"c\";\n"
        "  \"1\";\n"
        "  \"0\" -> \"a\";\n"
        "  \"0\" -> \"b\";\n"
        "  \"a\" -> \"c\";\n"
        "  \"b\" -> \"1\";\n"
        "  \"c\" -> \"1\";\n"
        "}\n");
}

TEST_CASE("set formatting is lexicographic by name") {
  Lattice fig5 = fixtures::fig5();
  ElementSet s(fig5);
  for (const char* n : {"f", "1", "h", "g"}) s.insert(fig5.require(n));
  CHECK(format_set(fig5, s) == "{1, f, g, h}");
  CHECK(format_set(fig5, ElementSet(fig5)) == "{}");
}
