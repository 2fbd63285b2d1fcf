#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace charbounds::exp {

/// Invalid command parameters; the message names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(const std::string& field, const std::string& why)
      : std::invalid_argument(field + ": " + why), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Format { jsonl, csv };

Format parse_format(const std::string& name);
std::string format_name(Format f);

/// Unset optionals mean "use the command's standard grid".
struct ExperimentConfig {
  std::string command;
  std::string battery;
  std::optional<std::uint64_t> q_min;
  std::optional<std::uint64_t> q_max;
  std::optional<int> order;
  std::optional<double> y;
  std::optional<double> T;
  std::optional<double> alpha;
  std::optional<double> grid;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;
  Format format = Format::jsonl;
  std::string baseline;
  bool timing = false;

  void validate() const;

  /// Every field, in declaration order.
  nlohmann::ordered_json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);

  /// FNV-1a over the fields that influence results (threads, out, format and
  /// timing excluded), as 16 hex digits.
  std::string hash() const;
};

/// Project version, compiler and build type.
std::string build_id();

constexpr int kSchemaVersion = 1;

}  // namespace charbounds::exp
