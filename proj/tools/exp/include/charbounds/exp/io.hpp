#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charbounds/exp/config.hpp"
#include "charbounds/exp/sweep.hpp"

namespace charbounds::exp {

/// Sweep columns in output order; also the CSV header.
const std::vector<std::string>& sweep_columns();

/// {config_hash, build, seed, schema_version, kind, config}.
nlohmann::ordered_json make_header(const ExperimentConfig& config, const std::string& kind);

/// "%.17g"; non-finite values become null.
std::string format_double(double x);

std::string to_jsonl(const SweepRecord& r);
std::string to_csv_row(const SweepRecord& r);

/// Header line, then one record per line.
void write_jsonl(std::ostream& out, const nlohmann::ordered_json& header,
                 const std::vector<SweepRecord>& records);
/// "# " + header json, the column line, then rows; null fields are empty.
void write_csv(std::ostream& out, const nlohmann::ordered_json& header,
               const std::vector<SweepRecord>& records);

struct SweepFile {
  nlohmann::json header;
  std::vector<SweepRecord> records;
};

SweepFile read_jsonl(std::istream& in);
SweepFile read_csv(std::istream& in);

/// Writes to `path` ("-" is stdout). I/O failures throw std::runtime_error
/// naming the path.
void export_records(const std::string& path, Format format, const nlohmann::ordered_json& header,
                    const std::vector<SweepRecord>& records);
SweepFile import_records(const std::string& path);

}  // namespace charbounds::exp
