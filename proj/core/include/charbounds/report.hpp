#pragma once

#include <string>
#include <utility>
#include <vector>

namespace charbounds {

/// Result of an inequality or identity check: both sides, their ratio and the
/// parameters that produced them. `defect` is operation specific (LHS - RHS,
/// |LHS - RHS| for identities); `params` keeps insertion order for stable output.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs_main = 0.0;
  double ratio = 0.0;
  double defect = 0.0;
  std::vector<std::pair<std::string, double>> params;

  double param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    return 0.0;
  }
};

}  // namespace charbounds
