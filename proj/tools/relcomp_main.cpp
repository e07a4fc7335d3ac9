// Command line front end: lattice file queries, statement checking, the
// enumeration suite, the fixture regression and DOT export.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relcomp/closure.hpp"
#include "relcomp/complement.hpp"
#include "relcomp/enumerate.hpp"
#include "relcomp/io.hpp"
#include "relcomp/regress.hpp"
#include "relcomp/verify.hpp"

namespace {

using namespace relcomp;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitParse = 2;
constexpr int kExitBadQuery = 3;

std::string element_list(const Lattice& l, const std::vector<ElementId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += l.element_name(ids[i]);
  }
  return out;
}

void print_witness(const Lattice& l, const Witness& w) {
  std::cout << "    lattice: " << (w.lattice.empty() ? l.name() : w.lattice) << "\n";
  if (w.interval)
    std::cout << "    interval: [" << l.element_name(w.interval->first) << ", "
              << l.element_name(w.interval->second) << "]\n";
  for (const auto& [role, id] : w.elements) {
    if (role == "implication")
      std::cout << "    " << role << ": " << id << "\n";
    else
      std::cout << "    " << role << " = " << l.element_name(id) << "\n";
  }
  for (const auto& [role, ids] : w.sets)
    std::cout << "    " << role << " = {" << element_list(l, ids) << "}\n";
  if (!w.detail.empty()) std::cout << "    detail: " << w.detail << "\n";
}

int print_report(const Lattice& l, const CheckReport& rep) {
  const char* status = rep.status == CheckStatus::Verified   ? "verified"
                       : rep.status == CheckStatus::Refuted ? "REFUTED"
                                                             : "vacuous";
  std::cout << rep.statement << ": " << status << " (" << rep.checked << " instances)";
  if (!rep.note.empty()) std::cout << "; " << rep.note;
  std::cout << "\n";
  if (rep.counterexample) print_witness(l, *rep.counterexample);
  return rep.holds() ? kExitHolds : kExitRefuted;
}

ElementId resolve(const Lattice& l, const std::string& name) { return l.require(name); }

int cmd_validate(const std::string& file) {
  Lattice l = load_lattice_file(file);
  std::cout << "ok: " << l.size() << " elements, " << l.covers().size() << " covers, bottom="
            << l.element_name(l.bottom()) << ", top=" << l.element_name(l.top()) << "\n";
  return kExitHolds;
}

int cmd_info(const std::string& file) {
  Lattice l = load_lattice_file(file);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "name: " << (l.name().empty() ? "(unnamed)" : l.name()) << "\n"
            << "elements: " << l.size() << "\n"
            << "covers: " << l.covers().size() << "\n"
            << "bottom: " << l.element_name(l.bottom()) << "\n"
            << "top: " << l.element_name(l.top()) << "\n"
            << "modular: " << yn(is_modular(l)) << "\n"
            << "distributive: " << yn(is_distributive(l)) << "\n"
            << "complemented: " << yn(is_complemented(l)) << "\n"
            << "relatively complemented: " << yn(is_rel_complemented(l)) << "\n";
  return kExitHolds;
}

int cmd_comp(const std::string& file, const std::string& x) {
  Lattice l = load_lattice_file(file);
  std::cout << format_set(l, complements(l, resolve(l, x))) << "\n";
  return kExitHolds;
}

enum class IntervalOp { RelComp, Bar, Hat };

int cmd_interval_set(const std::string& file, const std::string& a, const std::string& b,
                     const std::string& x, IntervalOp op) {
  Lattice l = load_lattice_file(file);
  Interval iv(l, resolve(l, a), resolve(l, b));
  ElementId id = resolve(l, x);
  ElementSet s = op == IntervalOp::RelComp ? rel_complements(iv, id)
                 : op == IntervalOp::Bar   ? bar(iv, id)
                                           : hat(iv, id);
  std::cout << format_set(l, s) << "\n";
  return kExitHolds;
}

int cmd_induced(const std::string& file, const std::string& a, const std::string& b,
                const std::string& u, const std::string& z) {
  Lattice l = load_lattice_file(file);
  Interval iv(l, resolve(l, a), resolve(l, b));
  InducedReport rep = check_induced(iv, resolve(l, z), resolve(l, u));
  std::cout << "interval: [" << l.element_name(rep.lower) << ", " << l.element_name(rep.upper)
            << "]\n"
            << "z: " << l.element_name(rep.z) << "\n"
            << "u: " << l.element_name(rep.u) << "\n"
            << "cond1: " << (rep.cond1_holds ? "holds" : "fails") << "\n"
            << "cond2: " << (rep.cond2_holds ? "holds" : "fails") << "\n";
  if (rep.v) {
    std::cout << "v: " << l.element_name(*rep.v) << "\n"
              << "v in z^{ab}: " << (*rep.v_in_relcomp ? "yes" : "no") << "\n";
  } else {
    std::cout << "v: not defined (cond1 fails)\n";
  }
  return kExitHolds;
}

int cmd_closure(const std::string& file, const std::string& a, const std::string& b,
                const std::vector<std::string>& xs) {
  Lattice l = load_lattice_file(file);
  Interval iv(l, resolve(l, a), resolve(l, b));
  ElementSet s(l);
  for (const std::string& x : xs) s.insert(resolve(l, x));
  std::cout << format_set(l, closure(iv, s)) << "\n";
  return kExitHolds;
}

int cmd_closed_sets(const std::string& file, const std::string& a, const std::string& b) {
  Lattice l = load_lattice_file(file);
  Interval iv(l, resolve(l, a), resolve(l, b));
  ClosedFamily fam = closed_family(iv);
  std::cout << "closed sets of [" << l.element_name(iv.lower()) << ", "
            << l.element_name(iv.upper()) << "]: " << fam.size() << "\n";
  for (std::size_t i = 0; i < fam.size(); ++i)
    std::cout << format_set(l, fam.at(i)) << "  ->  " << format_set(l, fam.at(fam.ortho(i)))
              << "\n";
  return kExitHolds;
}

int cmd_check(const std::string& file, const std::vector<std::string>& patterns) {
  Lattice l = load_lattice_file(file);
  int exit_code = kExitHolds;
  for (const StatementInfo* st : resolve_statements(patterns)) {
    CheckReport rep = check_statement(l, *st);
    if (print_report(l, rep) != kExitHolds) exit_code = kExitRefuted;
  }
  return exit_code;
}

int cmd_enumerate(unsigned max_size, const std::vector<std::string>& patterns, bool serial) {
  EnumerationRun run = run_suite(max_size, patterns, !serial);
  for (const auto& [size, count] : run.count_by_size)
    std::cout << "n=" << size << ": " << count << " lattices\n";
  std::cout << "statements: " << run.statements.size() << "\n"
            << "checked instances: " << run.checked_instances << "\n"
            << "failures: " << run.failures.size() << "\n";
  for (const CheckReport& rep : run.failures) {
    std::cout << rep.statement << " REFUTED";
    if (rep.counterexample) std::cout << " on " << rep.counterexample->lattice;
    std::cout << "\n";
  }
  return run.failures.empty() ? kExitHolds : kExitRefuted;
}

int cmd_paper_regress() {
  auto entries = run_paper_regress();
  std::size_t ok = 0;
  for (const RegressEntry& e : entries) {
    if (e.ok) ++ok;
    std::printf("%-22s %-62s %s\n", e.id.c_str(), e.description.c_str(),
                e.ok ? "ok" : ("FAIL: " + e.detail).c_str());
  }
  std::printf("paper-regress: %zu/%zu ok\n", ok, entries.size());
  return ok == entries.size() ? kExitHolds : kExitRefuted;
}

int cmd_dot(const std::string& file) {
  Lattice l = load_lattice_file(file);
  std::cout << to_dot(l);
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattices: complements, relative complements and their operators"};
  app.require_subcommand(1);

  std::string file, elem_a, elem_b, elem_x, elem_u, elem_z;
  std::vector<std::string> elems, statements;
  unsigned max_size = 6;
  bool serial = false;
  bool all_statements = false;

  auto* validate = app.add_subcommand("validate", "parse a lattice file and check the axioms");
  validate->add_option("file", file)->required();

  auto* info = app.add_subcommand("info", "bounds and structural flags");
  info->add_option("file", file)->required();

  auto* comp = app.add_subcommand("comp", "complements of an element");
  comp->add_option("file", file)->required();
  comp->add_option("x", elem_x)->required();

  auto* relcomp_cmd = app.add_subcommand("relcomp", "relative complements of x in [a,b]");
  auto* bar_cmd = app.add_subcommand("bar", "(x+ v a) ^ b");
  auto* hat_cmd = app.add_subcommand("hat", "(x+ ^ b) v a");
  for (CLI::App* c : {relcomp_cmd, bar_cmd, hat_cmd}) {
    c->add_option("file", file)->required();
    c->add_option("a", elem_a)->required();
    c->add_option("b", elem_b)->required();
    c->add_option("x", elem_x)->required();
  }

  auto* induced = app.add_subcommand("induced", "induced-element report for z in [a,b] and u");
  induced->add_option("file", file)->required();
  induced->add_option("a", elem_a)->required();
  induced->add_option("b", elem_b)->required();
  induced->add_option("u", elem_u)->required();
  induced->add_option("z", elem_z)->required();

  auto* closure_cmd = app.add_subcommand("closure", "(A^{ab})^{ab} for A = {x...}");
  closure_cmd->add_option("file", file)->required();
  closure_cmd->add_option("a", elem_a)->required();
  closure_cmd->add_option("b", elem_b)->required();
  closure_cmd->add_option("x", elems);

  auto* closed = app.add_subcommand("closed-sets", "the closed-set family of [a,b]");
  closed->add_option("file", file)->required();
  closed->add_option("a", elem_a)->required();
  closed->add_option("b", elem_b)->required();

  auto* check = app.add_subcommand("check", "evaluate registered statements on a lattice");
  check->add_option("file", file)->required();
  check->add_option("--statement,-s", statements, "statement id or trailing-star pattern");
  check->add_flag("--all", all_statements, "run every registered statement (default)");

  auto* enumerate = app.add_subcommand("enumerate", "run statements over all small lattices");
  enumerate->add_option("--max,-n", max_size, "largest lattice size")->required();
  enumerate->add_option("--statement,-s", statements, "statement id or pattern");
  enumerate->add_flag("--serial", serial, "disable the parallel driver");

  auto* regress = app.add_subcommand("paper-regress", "fixture regression table");
  (void)regress;

  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitHolds : kExitBadQuery;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (info->parsed()) return cmd_info(file);
    if (comp->parsed()) return cmd_comp(file, elem_x);
    if (relcomp_cmd->parsed())
      return cmd_interval_set(file, elem_a, elem_b, elem_x, IntervalOp::RelComp);
    if (bar_cmd->parsed()) return cmd_interval_set(file, elem_a, elem_b, elem_x, IntervalOp::Bar);
    if (hat_cmd->parsed()) return cmd_interval_set(file, elem_a, elem_b, elem_x, IntervalOp::Hat);
    if (induced->parsed()) return cmd_induced(file, elem_a, elem_b, elem_u, elem_z);
    if (closure_cmd->parsed()) return cmd_closure(file, elem_a, elem_b, elems);
    if (closed->parsed()) return cmd_closed_sets(file, elem_a, elem_b);
    if (check->parsed()) return cmd_check(file, statements);
    if (enumerate->parsed()) return cmd_enumerate(max_size, statements, serial);
    if (regress->parsed()) return cmd_paper_regress();
    if (dot->parsed()) return cmd_dot(file);
  } catch (const ParseError& e) {
    std::cerr << "error: line " << e.line << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const CycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotALattice& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NoBounds& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const SizeOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    // bad query: unknown element, incomparable bounds, out-of-interval, ...
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadQuery;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitBadQuery;
  }
  return kExitHolds;
}
