#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bohr {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelfcheckOptions {
  bool quick = false;
  /// Adds 1e-3 to a_1 of every extremal map before the equality checks.
  bool perturb = false;
};

/// Invariant suite across all modules. Each check runs in isolation; an
/// exception counts as a failure with its message as detail.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opt = {});

}  // namespace bohr
