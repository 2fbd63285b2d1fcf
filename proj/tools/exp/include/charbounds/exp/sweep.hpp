#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charbounds/exp/config.hpp"

namespace charbounds::exp {

struct SweepRecord {
  std::uint64_t q = 0;
  std::uint64_t char_index = 0;
  int order = 0;
  int parity = 1;
  double M_chi = 0.0;
  std::uint64_t argmax_t = 0;
  /// M / (sqrt(q) log q).
  double ratio_pv = 0.0;
  /// M / (sqrt(q) (log q)^(1 - delta_g) (log log q)^(-1/4)); odd orders only.
  std::optional<double> ratio_thm11;
  /// M / (sqrt(q) (log log q)^(1 - delta_g) (log log log q)^(-1/4)); odd
  /// orders with log log log q > 0.
  std::optional<double> ratio_lower;
  /// max of ratio_pv over this and every later record.
  double tail_max_pv = 0.0;
  double elapsed = 0.0;

  bool operator==(const SweepRecord&) const = default;
};

/// Ratio columns recomputed from (q, order, M).
double ratio_pv(std::uint64_t q, double M);
std::optional<double> ratio_thm11(std::uint64_t q, int order, double M);
std::optional<double> ratio_lower(std::uint64_t q, int order, double M);

/// One record per primitive character of exact order config.order with
/// config.q_min <= q <= config.q_max, sorted by (q, char_index) whatever the
/// thread count.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

}  // namespace charbounds::exp
