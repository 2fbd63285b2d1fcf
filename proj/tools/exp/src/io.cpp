#include "charbounds/exp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace charbounds::exp {

namespace {

std::string opt_double(const std::optional<double>& v) { return v ? format_double(*v) : "null"; }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> json_opt(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {"q",           "char_index", "order",       "parity",
                                                "M_chi",       "argmax_t",   "ratio_pv",    "ratio_thm11",
                                                "ratio_lower", "tail_max_pv", "elapsed"};
  return cols;
}

nlohmann::ordered_json make_header(const ExperimentConfig& config, const std::string& kind) {
  nlohmann::ordered_json h;
  h["config_hash"] = config.hash();
  h["build"] = build_id();
  h["seed"] = config.seed;
  h["schema_version"] = kSchemaVersion;
  h["kind"] = kind;
  auto cfg = config.to_json();
  cfg.erase("threads");
  cfg.erase("out");
  h["config"] = cfg;
  return h;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_jsonl(const SweepRecord& r) {
  std::string s = "{\"q\":" + std::to_string(r.q);
  s += ",\"char_index\":" + std::to_string(r.char_index);
  s += ",\"order\":" + std::to_string(r.order);
  s += ",\"parity\":" + std::to_string(r.parity);
  s += ",\"M_chi\":" + format_double(r.M_chi);
  s += ",\"argmax_t\":" + std::to_string(r.argmax_t);
  s += ",\"ratio_pv\":" + format_double(r.ratio_pv);
  s += ",\"ratio_thm11\":" + opt_double(r.ratio_thm11);
  s += ",\"ratio_lower\":" + opt_double(r.ratio_lower);
  s += ",\"tail_max_pv\":" + format_double(r.tail_max_pv);
  s += ",\"elapsed\":" + format_double(r.elapsed);
  s += "}";
  return s;
}

std::string to_csv_row(const SweepRecord& r) {
  auto cell = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  return std::to_string(r.q) + "," + std::to_string(r.char_index) + "," + std::to_string(r.order) + "," +
         std::to_string(r.parity) + "," + format_double(r.M_chi) + "," + std::to_string(r.argmax_t) + "," +
         format_double(r.ratio_pv) + "," + cell(r.ratio_thm11) + "," + cell(r.ratio_lower) + "," +
         format_double(r.tail_max_pv) + "," + format_double(r.elapsed);
}

void write_jsonl(std::ostream& out, const nlohmann::ordered_json& header,
                 const std::vector<SweepRecord>& records) {
  out << header.dump() << '\n';
  for (const auto& r : records) out << to_jsonl(r) << '\n';
}

void write_csv(std::ostream& out, const nlohmann::ordered_json& header,
               const std::vector<SweepRecord>& records) {
  out << "# " << header.dump() << '\n';
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

SweepFile read_jsonl(std::istream& in) {
  SweepFile f;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_jsonl: missing header line");
  f.header = nlohmann::json::parse(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    SweepRecord r;
    r.q = j.at("q").get<std::uint64_t>();
    r.char_index = j.at("char_index").get<std::uint64_t>();
    r.order = j.at("order").get<int>();
    r.parity = j.at("parity").get<int>();
    r.M_chi = j.at("M_chi").get<double>();
    r.argmax_t = j.at("argmax_t").get<std::uint64_t>();
    r.ratio_pv = j.at("ratio_pv").get<double>();
    r.ratio_thm11 = json_opt(j, "ratio_thm11");
    r.ratio_lower = json_opt(j, "ratio_lower");
    r.tail_max_pv = j.at("tail_max_pv").get<double>();
    r.elapsed = j.at("elapsed").get<double>();
    f.records.push_back(r);
  }
  return f;
}

SweepFile read_csv(std::istream& in) {
  SweepFile f;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw std::runtime_error("read_csv: missing header comment");
  f.header = nlohmann::json::parse(line.substr(2));
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: missing column line");
  const auto& cols = sweep_columns();
  if (split_csv(line) != cols) throw std::runtime_error("read_csv: column line does not match schema");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c = split_csv(line);
    if (c.size() != cols.size()) throw std::runtime_error("read_csv: wrong field count in '" + line + "'");
    auto opt = [](const std::string& s) { return s.empty() ? std::optional<double>() : std::stod(s); };
    SweepRecord r;
    r.q = std::stoull(c[0]);
    r.char_index = std::stoull(c[1]);
    r.order = std::stoi(c[2]);
    r.parity = std::stoi(c[3]);
    r.M_chi = std::stod(c[4]);
    r.argmax_t = std::stoull(c[5]);
    r.ratio_pv = std::stod(c[6]);
    r.ratio_thm11 = opt(c[7]);
    r.ratio_lower = opt(c[8]);
    r.tail_max_pv = std::stod(c[9]);
    r.elapsed = std::stod(c[10]);
    f.records.push_back(r);
  }
  return f;
}

void export_records(const std::string& path, Format format, const nlohmann::ordered_json& header,
                    const std::vector<SweepRecord>& records) {
  auto emit = [&](std::ostream& os) {
    if (format == Format::csv)
      write_csv(os, header, records);
    else
      write_jsonl(os, header, records);
  };
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit(os);
  os.flush();
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

SweepFile import_records(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  const int first = in.peek();
  try {
    return first == '#' ? read_csv(in) : read_jsonl(in);
  } catch (const std::exception& e) {
    throw std::runtime_error("'" + path + "': " + e.what());
  }
}

}  // namespace charbounds::exp
