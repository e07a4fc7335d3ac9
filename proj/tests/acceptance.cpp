// Acceptance suite: one pass/fail line per criterion, wall-clock budgets
// included in the verdicts. Exits nonzero when anything fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "relcomp/closure.hpp"
#include "relcomp/complement.hpp"
#include "relcomp/enumerate.hpp"
#include "relcomp/fixtures.hpp"
#include "relcomp/io.hpp"
#include "relcomp/regress.hpp"
#include "relcomp/verify.hpp"

using namespace relcomp;

namespace {

bool regress_subset(const char* prefix, std::string& detail) {
  bool ok = true;
  for (const RegressEntry& e : run_paper_regress()) {
    if (e.id.rfind(prefix, 0) != 0) continue;
    if (!e.ok) {
      ok = false;
      detail += e.id + ": " + e.detail + "; ";
    }
  }
  return ok;
}

bool criterion1(std::string& detail) { return regress_subset("fig1.", detail); }
bool criterion2(std::string& detail) { return regress_subset("fig2.", detail); }
bool criterion3(std::string& detail) { return regress_subset("fig4.", detail); }
bool criterion4(std::string& detail) { return regress_subset("fig5.", detail); }

bool criterion5(std::string& detail) {
  std::vector<Lattice> factors;
  factors.push_back(make_boolean(2));
  factors.push_back(make_mn(3));
  factors.push_back(make_mn(4));
  Lattice product = direct_product(factors);
  if (product.size() != 120) {
    detail = "product has " + std::to_string(product.size()) + " elements";
    return false;
  }
  CheckReport rep = verify_th1(factors);
  if (rep.status != CheckStatus::Verified) {
    detail = "sweep not verified";
    if (rep.counterexample) detail += ": " + rep.counterexample->detail;
    return false;
  }
  return true;
}

bool criterion6(std::string& detail) {
  // enumeration counts cross-checked against the independent labeled oracle
  for (unsigned n = 1; n <= 5; ++n) {
    std::size_t expected = oracle::lattice_canon_classes(n).size();
    if (enumerate_lattices(n).size() != expected) {
      detail = "count mismatch at size " + std::to_string(n);
      return false;
    }
  }
  EnumerationRun run = run_suite(
      6, {"galois.*", "prop1.*", "cor1", "fixedpoint", "le1.theorem", "prop3",
          "prop3.modular", "th2"});
  if (run.count_by_size[6] != 15) {
    detail = "expected 15 lattices of size 6, got " + std::to_string(run.count_by_size[6]);
    return false;
  }
  if (!run.failures.empty()) {
    detail = std::to_string(run.failures.size()) + " refuted statements, first: " +
             run.failures.front().statement;
    return false;
  }
  if (run.checked_instances <= 0) {
    detail = "nothing was checked";
    return false;
  }
  return true;
}

bool criterion7(std::string& detail) {
  std::vector<Lattice> fixture_set;
  fixture_set.push_back(fixtures::fig1());
  fixture_set.push_back(fixtures::fig2());
  fixture_set.push_back(fixtures::fig4());
  fixture_set.push_back(fixtures::fig5());
  fixture_set.push_back(make_mn(3));
  fixture_set.push_back(make_mn(4));
  fixture_set.push_back(fixtures::n5());

  for (const Lattice& l : fixture_set) {
    for (auto [a, b] : comparable_pairs(l)) {
      if (a == b) continue;
      Interval iv(l, a, b);
      if (iv.size() > 16 || !is_complemented(iv)) continue;
      ClosedFamily fam = closed_family(iv);  // construction verifies the axioms
      auto brute = oracle::closed_family_brute(iv);
      if (fam.size() != brute.size()) {
        detail = l.name() + ": family size " + std::to_string(fam.size()) + " vs oracle " +
                 std::to_string(brute.size());
        return false;
      }
      for (std::size_t i = 0; i < brute.size(); ++i)
        if (fam.at(i) != brute[i]) {
          detail = l.name() + ": family content differs from the oracle";
          return false;
        }
    }
  }

  Lattice m3 = make_mn(3);
  ClosedFamily fam = closed_family(Interval(m3, m3.bottom(), m3.top()));
  if (fam.size() != 10) {
    detail = "M3 family has " + std::to_string(fam.size()) + " members, expected 10";
    return false;
  }
  return true;
}

bool criterion8(std::string& detail) {
  Lattice pat6 = fixtures::fig6_pattern();
  auto self = find_pattern(pat6, pat6);
  if (self.size() != 1) {
    detail = "expected one anchored self-match, got " + std::to_string(self.size());
    return false;
  }
  if (verify_remark_patterns(pat6).status != CheckStatus::Verified) {
    detail = "pattern conclusion not verified on the pattern lattice";
    return false;
  }
  Lattice fig1 = fixtures::fig1();
  if (!find_pattern(fig1, pat6).empty() ||
      !find_pattern(fig1, fixtures::fig7_pattern()).empty()) {
    detail = "unexpected pattern occurrence in fig1";
    return false;
  }
  CheckReport distinct = verify_remark_distinct(fig1);
  if (distinct.status != CheckStatus::Verified) {
    detail = "distinct-induced-elements claim not verified on fig1";
    if (distinct.counterexample) {
      const Witness& w = *distinct.counterexample;
      detail += ": in [" + fig1.element_name(w.interval->first) + ", " +
                fig1.element_name(w.interval->second) + "]";
      for (const auto& [role, id] : w.elements)
        detail += " " + role + "=" + fig1.element_name(id);
      detail += " (" + w.detail + ")";
    }
    return false;
  }
  return true;
}

std::string run_cli(const std::string& args, int& exit_code) {
  std::string cmd = std::string(RELCOMP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return out;
}

bool criterion9(std::string& detail) {
  int code1 = 0, code2 = 0;
  std::string first = run_cli("paper-regress", code1);
  std::string second = run_cli("paper-regress", code2);
  if (code1 != 0 || code2 != 0) {
    detail = "paper-regress exit codes " + std::to_string(code1) + ", " + std::to_string(code2);
    return false;
  }
  if (first != second || first.empty()) {
    detail = "repeated runs are not byte-identical";
    return false;
  }

  namespace fs = std::filesystem;
  for (const auto& entry : fs::directory_iterator(RELCOMP_FIXTURE_DIR)) {
    if (entry.path().extension() != ".lat") continue;
    Lattice l = load_lattice_file(entry.path().string());
    std::string printed = print_lattice(l);
    if (print_lattice(parse_lattice(printed)) != printed) {
      detail = "round-trip failed for " + entry.path().filename().string();
      return false;
    }
    int code = 0;
    run_cli("validate " + entry.path().string(), code);
    if (code != 0) {
      detail = "validate failed for " + entry.path().filename().string();
      return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;  // 0 = untimed
  std::function<bool(std::string&)> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fig1 regression", 1.0, criterion1},
      {2, "fig2 regression and global sweep", 5.0, criterion2},
      {3, "fig4 regression and product check", 2.0, criterion3},
      {4, "fig5 regression", 1.0, criterion4},
      {5, "product sweep at 120 elements", 120.0, criterion5},
      {6, "enumeration suite to size 6", 300.0, criterion6},
      {7, "closed-family oracle on the fixture set", 30.0, criterion7},
      {8, "pattern machinery", 5.0, criterion8},
      {9, "CLI determinism and round-trips", 0.0, criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = c.budget_seconds == 0.0 || seconds < c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %d %s  %s (%.2f s%s%s)%s%s\n", c.number, pass ? "PASS" : "FAIL",
                c.title, seconds, c.budget_seconds > 0 ? ", budget " : "",
                c.budget_seconds > 0
                    ? (std::to_string(static_cast<int>(c.budget_seconds)) + " s").c_str()
                    : "",
                detail.empty() ? "" : "  ", detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
