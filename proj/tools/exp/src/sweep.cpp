#include "charbounds/exp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "charbounds/charsum.hpp"
#include "charbounds/dirichlet.hpp"
#include "charbounds/errors.hpp"
#include "charbounds/pretentious.hpp"

namespace charbounds::exp {

double ratio_pv(std::uint64_t q, double M) {
  const double qd = static_cast<double>(q);
  return M / (std::sqrt(qd) * std::log(qd));
}

std::optional<double> ratio_thm11(std::uint64_t q, int order, double M) {
  if (order % 2 == 0) return std::nullopt;
  const double qd = static_cast<double>(q);
  const double L1 = std::log(qd), L2 = std::log(L1);
  if (!(L2 > 0.0)) return std::nullopt;
  return M / (std::sqrt(qd) * std::pow(L1, 1.0 - delta_g(order)) * std::pow(L2, -0.25));
}

std::optional<double> ratio_lower(std::uint64_t q, int order, double M) {
  if (order % 2 == 0) return std::nullopt;
  const double qd = static_cast<double>(q);
  const double L2 = std::log(std::log(qd));
  if (!(L2 > 1.0)) return std::nullopt;
  const double L3 = std::log(L2);
  return M / (std::sqrt(qd) * std::pow(L2, 1.0 - delta_g(order)) * std::pow(L3, -0.25));
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
  config.validate();
  if (!config.q_max) throw ConfigError("q-max", "required for sweep");
  if (!config.order) throw ConfigError("order", "required for sweep");
  const std::uint64_t q_lo = std::max<std::uint64_t>(config.q_min.value_or(1), 1);
  const std::uint64_t q_hi = *config.q_max;
  if (q_hi > DirichletGroup::kSweepLimit) throw CapacityError("run_sweep: q-max exceeds the sweep limit");
  const int g = *config.order;
  if (q_lo > q_hi) return {};

  CharacterFilter filter;
  filter.order_equals = static_cast<u64>(g);
  filter.primitive_only = true;

  std::atomic<std::uint64_t> next{q_lo};
  std::vector<std::vector<SweepRecord>> parts(config.threads);
  auto worker = [&](unsigned id) {
    auto& out = parts[id];
    for (std::uint64_t q = next++; q <= q_hi; q = next++) {
      if (!may_have_characters(q, filter)) continue;
      for (const auto& chi : enumerate_characters(build_group(q), filter)) {
        const auto start = std::chrono::steady_clock::now();
        const auto m = max_char_sum(chi);
        SweepRecord r;
        r.q = q;
        r.char_index = chi.index();
        r.order = g;
        r.parity = chi.parity();
        r.M_chi = m.value;
        r.argmax_t = m.argmax_t;
        r.ratio_pv = ratio_pv(q, m.value);
        r.ratio_thm11 = ratio_thm11(q, g, m.value);
        r.ratio_lower = ratio_lower(q, g, m.value);
        if (config.timing)
          r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(r);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < config.threads; ++i) pool.emplace_back(worker, i);
  worker(0);
  for (auto& t : pool) t.join();

  std::vector<SweepRecord> records;
  for (auto& p : parts) records.insert(records.end(), p.begin(), p.end());
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return a.q != b.q ? a.q < b.q : a.char_index < b.char_index;
  });
  double tail = 0.0;
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    tail = std::max(tail, it->ratio_pv);
    it->tail_max_pv = tail;
  }
  return records;
}

}  // namespace charbounds::exp
