#pragma once

#include <string>
#include <utility>
#include <vector>

namespace conelab {

/// One named pass/fail outcome, as it appears in reports.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

} // namespace conelab
