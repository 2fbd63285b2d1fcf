#include "charbounds/exp/config.hpp"

#include <cmath>
#include <cstdio>

namespace charbounds::exp {

namespace {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

void require_positive(const std::optional<double>& v, const char* field) {
  if (v && !(std::isfinite(*v) && *v > 0.0)) throw ConfigError(field, "must be a positive number");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "jsonl" || name == "json-lines") return Format::jsonl;
  if (name == "csv") return Format::csv;
  throw ConfigError("format", "expected jsonl or csv, got '" + name + "'");
}

std::string format_name(Format f) { return f == Format::csv ? "csv" : "jsonl"; }

void ExperimentConfig::validate() const {
  if (q_min && *q_min == 0) throw ConfigError("q-min", "must be >= 1");
  if (q_max && *q_max == 0) throw ConfigError("q-max", "must be >= 1");
  if (order && *order < 2) throw ConfigError("order", "must be >= 2");
  require_positive(y, "y");
  require_positive(T, "T");
  require_positive(alpha, "alpha");
  require_positive(grid, "grid");
  if (y && *y < 2.0) throw ConfigError("y", "must be >= 2");
  if (threads == 0) throw ConfigError("threads", "must be >= 1");
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["battery"] = battery;
  j["q_min"] = opt(q_min);
  j["q_max"] = opt(q_max);
  j["order"] = opt(order);
  j["y"] = opt(y);
  j["T"] = opt(T);
  j["alpha"] = opt(alpha);
  j["grid"] = opt(grid);
  j["seed"] = seed;
  j["threads"] = threads;
  j["out"] = out;
  j["format"] = format_name(format);
  j["baseline"] = baseline;
  j["timing"] = timing;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.command = j.value("command", "");
  c.battery = j.value("battery", "");
  c.q_min = get_opt<std::uint64_t>(j, "q_min");
  c.q_max = get_opt<std::uint64_t>(j, "q_max");
  c.order = get_opt<int>(j, "order");
  c.y = get_opt<double>(j, "y");
  c.T = get_opt<double>(j, "T");
  c.alpha = get_opt<double>(j, "alpha");
  c.grid = get_opt<double>(j, "grid");
  c.seed = j.value("seed", std::uint64_t{1});
  c.threads = j.value("threads", 1u);
  c.out = j.value("out", "");
  c.format = parse_format(j.value("format", "jsonl"));
  c.baseline = j.value("baseline", "");
  c.timing = j.value("timing", false);
  return c;
}

std::string ExperimentConfig::hash() const {
  auto j = to_json();
  j.erase("threads");
  j.erase("out");
  j.erase("format");
  j.erase("timing");
  const std::string canon = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string build_id() {
#if defined(__clang__)
  const std::string compiler = "clang-" + std::to_string(__clang_major__) + "." + std::to_string(__clang_minor__);
#elif defined(__GNUC__)
  const std::string compiler = "gcc-" + std::to_string(__GNUC__) + "." + std::to_string(__GNUC_MINOR__);
#else
  const std::string compiler = "unknown";
#endif
  return std::string("charbounds-") + CHARBOUNDS_VERSION + " " + compiler + " " + CHARBOUNDS_BUILD_TYPE;
}

}  // namespace charbounds::exp
