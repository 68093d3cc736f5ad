#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spinspec {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;  // empty on success, diagnosis on failure
};

/// Every invariant suite of the library, in a fixed order. Each entry runs
/// independently; an exception inside a check is reported as a failure.
std::vector<CheckResult> run_all_checks();

}  // namespace spinspec
