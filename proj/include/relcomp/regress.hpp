#pragma once

#include <string>
#include <vector>

namespace relcomp {

/// One fixture assertion: an expected value of a complement, relative
/// complement, bar/hat image, induced element or structural flag on the
/// bundled fig1/fig2/fig4/fig5 lattices.
struct RegressEntry {
  std::string id;
  std::string description;
  bool ok = false;
  std::string detail;  // actual vs expected when it fails
};

/// Runs the whole fixture regression. Deterministic order and content.
std::vector<RegressEntry> run_paper_regress();

}  // namespace relcomp
