#include "relcomp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace relcomp {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
           line[j] != '#')
      ++j;
    tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Lattice parse_lattice(std::string_view text) {
  std::string name;
  bool named = false;
  std::vector<std::string> elements;
  std::unordered_map<std::string, int> declared;  // name -> declaring line
  struct PendingCover {
    std::string lower, upper;
    int line;
  };
  std::vector<PendingCover> covers;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];
    if (directive == "lattice") {
      if (tokens.size() != 2) throw ParseError("'lattice' takes exactly one name", line_no);
      if (named) throw ParseError("duplicate 'lattice' directive", line_no);
      named = true;
      name = tokens[1];
    } else if (directive == "elem") {
      if (tokens.size() < 2) throw ParseError("'elem' needs at least one name", line_no);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto [it, inserted] = declared.emplace(tokens[i], line_no);
        if (!inserted)
          throw ParseError("duplicate element name '" + tokens[i] + "' (first declared on line " +
                               std::to_string(it->second) + ")",
                           line_no);
        elements.push_back(tokens[i]);
      }
    } else if (directive == "cover") {
      if (tokens.size() != 3) throw ParseError("'cover' takes exactly two names", line_no);
      covers.push_back({tokens[1], tokens[2], line_no});
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no);
    }
  }

  if (elements.empty()) throw ParseError("no elements declared", line_no);
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(covers.size());
  for (const PendingCover& c : covers) {
    if (!declared.count(c.lower))
      throw ParseError("unknown element '" + c.lower + "' in cover", c.line);
    if (!declared.count(c.upper))
      throw ParseError("unknown element '" + c.upper + "' in cover", c.line);
    pairs.emplace_back(c.lower, c.upper);
  }
  return Lattice::from_covers(std::move(name), elements, pairs);
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string print_lattice(const Lattice& l) {
  std::string out;
  if (!l.name().empty()) out += "lattice " + l.name() + "\n";
  out += "elem";
  for (const std::string& n : l.element_names()) out += " " + n;
  out += "\n";
  for (auto [x, y] : l.covers())
    out += "cover " + l.element_name(x) + " " + l.element_name(y) + "\n";
  return out;
}

std::string to_dot(const Lattice& l) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph " + quote(l.name().empty() ? "lattice" : l.name()) + " {\n";
  out += "  rankdir=BT;\n";
  for (const std::string& n : l.element_names()) out += "  " + quote(n) + ";\n";
  for (auto [x, y] : l.covers())
    out += "  " + quote(l.element_name(x)) + " -> " + quote(l.element_name(y)) + ";\n";
  out += "}\n";
  return out;
}

std::string format_set(const Lattice& l, const ElementSet& s) {
  std::vector<std::string> names;
  s.for_each([&](ElementId x) { names.push_back(l.element_name(x)); });
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + "}";
}

}  // namespace relcomp
