#pragma once

#include <string>
#include <vector>

#include "monadic/fixtures.hpp"

namespace monadic {

struct CheckResult {
  std::string name;
  std::string anchor;  // the quoted statement the check establishes
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::string only;  // substring filter on check names; empty runs everything
  bool parallel = false;
};

/// Names of all checks in run order.
std::vector<std::string> verify_check_names();

/// Runs the end-to-end checks against the given fixtures. Results come back in
/// declaration order whether or not they ran concurrently. Exceptions inside a
/// check count as failures.
std::vector<CheckResult> verify_paper(const Fixtures& fx, const VerifyOptions& options = {});

}  // namespace monadic
