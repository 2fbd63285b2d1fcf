#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "charbounds/halasz.hpp"
#include "charbounds/pretentious.hpp"

namespace charbounds::exp {

/// f(p) = e(u_p), u_p uniform on [0, 1) from the top 53 bits of mt19937_64.
CMFunction random_unimodular(u64 bound, std::mt19937_64& rng);

struct HalaszCorpus {
  std::uint64_t seed = 1;
  int count = 8;
  double x = 1e5;
  double y = 1e5;
  std::vector<double> Ts{0.01, 0.1, 1.0};
  double resolution = 0.01;
};

struct HalaszCorpusRun {
  /// reports[i * Ts.size() + j] for function i at Ts[j].
  std::vector<HalaszReport> reports;
  /// Largest ratio at each T.
  std::vector<double> max_ratio;
  double max_ratio_overall = 0.0;
};

HalaszCorpusRun run_halasz_corpus(const HalaszCorpus& corpus);

}  // namespace charbounds::exp
