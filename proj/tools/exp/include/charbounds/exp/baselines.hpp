#pragma once

#include <stdexcept>
#include <string>

#include "charbounds/exp/config.hpp"
#include "json.hpp"

namespace charbounds::exp {

/// Unreadable, malformed or inconsistent baseline data.
class BaselineError : public std::runtime_error {
 public:
  explicit BaselineError(const std::string& what) : std::runtime_error("baseline mismatch: " + what) {}
};

/// data/baselines.json in the source tree.
std::string default_baseline_path();

nlohmann::json load_baselines(const std::string& path);

/// baselines[key]["value"], required finite and positive.
double baseline_value(const nlohmann::json& baselines, const std::string& key);

/// Recomputes every frozen constant and returns the document written to
/// data/baselines.json. `progress` receives one line per stage.
nlohmann::ordered_json run_pilot(const ExperimentConfig& config, std::ostream* progress = nullptr);

}  // namespace charbounds::exp
