#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace monadic {

/// One failed defining condition together with the points or elements that witness it.
struct Violation {
  std::string condition;
  std::vector<std::size_t> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& condition) const {
    for (const auto& v : violations) {
      if (v.condition == condition) return true;
    }
    return false;
  }
  void add(std::string condition, std::vector<std::size_t> witness) {
    violations.push_back({std::move(condition), std::move(witness)});
  }
};

}  // namespace monadic
