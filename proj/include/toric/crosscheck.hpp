#pragma once

#include <string>
#include <vector>

namespace toric {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // counterexample or summary
};

/// The full cross-model verification matrix. Each check caps its sweep at
/// max_d; the default bounds of the suite are reached at max_d = 12.
std::vector<CheckResult> run_crosscheck(int max_d);

}  // namespace toric
