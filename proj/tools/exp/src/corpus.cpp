#include "charbounds/exp/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "charbounds/arith.hpp"

namespace charbounds::exp {

CMFunction random_unimodular(u64 bound, std::mt19937_64& rng) {
  return CMFunction::from_primes(bound, [&rng](u64) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::polar(1.0, kTwoPi * u);
  });
}

HalaszCorpusRun run_halasz_corpus(const HalaszCorpus& corpus) {
  std::mt19937_64 rng(corpus.seed);
  const u64 bound = static_cast<u64>(std::floor(std::max(corpus.x, corpus.y)));
  HalaszCorpusRun run;
  run.max_ratio.assign(corpus.Ts.size(), 0.0);
  for (int i = 0; i < corpus.count; ++i) {
    const auto f = random_unimodular(bound, rng);
    for (std::size_t j = 0; j < corpus.Ts.size(); ++j) {
      const auto rep = halasz_bound_check(f, corpus.x, corpus.y, corpus.Ts[j], corpus.resolution);
      run.max_ratio[j] = std::max(run.max_ratio[j], rep.ratio);
      run.max_ratio_overall = std::max(run.max_ratio_overall, rep.ratio);
      run.reports.push_back(rep);
    }
  }
  return run;
}

}  // namespace charbounds::exp
