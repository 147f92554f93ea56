#pragma once

#include <string>
#include <vector>

#include "treelat/tree.hpp"

namespace treelat {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string tree_name;
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Runs the combinatorial property suite on one tree: facet/flip structure,
// biclosed lattice and its quotient, noncrossing tree partitions, Kreweras
// complementation, shard order, tiling-algebra subcategories,
// simple-minded collections, c-matrices (degree-3 trees) and the polygon
// correspondence.
VerifyReport verify_tree(const TreeSpec& spec, const std::string& name = "");

}  // namespace treelat
