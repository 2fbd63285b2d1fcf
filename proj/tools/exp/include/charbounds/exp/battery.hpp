#pragma once

#include <string>
#include <vector>

#include "charbounds/exp/config.hpp"
#include "json.hpp"

namespace charbounds::exp {

struct BatteryResult {
  std::string name;
  bool pass = true;
  /// One line per failed assertion (capped), or the baseline diagnostic.
  std::vector<std::string> failures;
  std::size_t failure_count = 0;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::vector<nlohmann::ordered_json> cases;

  void fail(const std::string& why);
  /// fail(why) unless ok; returns ok.
  bool check(bool ok, const std::string& why);
};

const std::vector<std::string>& battery_names();

/// Runs one battery on its standard grid, narrowed or widened by the set
/// fields of `config`. Unknown names throw ConfigError on "battery".
BatteryResult run_battery(const std::string& name, const ExperimentConfig& config);

}  // namespace charbounds::exp
