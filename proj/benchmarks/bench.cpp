#include <benchmark/benchmark.h>

#include <random>

#include "charbounds/charsum.hpp"
#include "charbounds/dirichlet.hpp"
#include "charbounds/euler.hpp"
#include "charbounds/halasz.hpp"
#include "charbounds/pretentious.hpp"

using namespace charbounds;

namespace {

DirichletCharacter first_cubic(u64 q) {
  CharacterFilter f;
  f.order_equals = 3;
  f.primitive_only = true;
  return enumerate_characters(build_group(q), f).front();
}

CMFunction random_f(u64 bound) {
  std::mt19937_64 rng(7);
  return CMFunction::from_primes(bound, [&](u64) {
    return std::polar(1.0, kTwoPi * static_cast<double>(rng() >> 11) * 0x1.0p-53);
  });
}

}  // namespace

static void BM_BuildGroup(benchmark::State& state) {
  const u64 q = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_group(q));
}
BENCHMARK(BM_BuildGroup)->Arg(9973)->Arg(99991)->Arg(999983);

static void BM_MaxCharSum(benchmark::State& state) {
  const auto chi = first_cubic(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_char_sum(chi).value);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MaxCharSum)->Arg(9973)->Arg(99991)->Arg(999979);

static void BM_PolyaExpandAll(benchmark::State& state) {
  const u64 q = static_cast<u64>(state.range(0));
  const auto chi = first_cubic(q);
  const PolyaKernel kernel(q, q * q);
  for (auto _ : state) benchmark::DoNotOptimize(kernel.expand_all(chi));
}
BENCHMARK(BM_PolyaExpandAll)->Arg(199)->Arg(997);

static void BM_LValueKernel(benchmark::State& state) {
  const u64 q = static_cast<u64>(state.range(0));
  const auto chi = first_cubic(q);
  const LValueKernel kernel(q, 1000000, 1e6);
  for (auto _ : state) benchmark::DoNotOptimize(kernel.log_euler_product(chi));
}
BENCHMARK(BM_LValueKernel)->Arg(499);

static void BM_DistanceSq(benchmark::State& state) {
  const u64 y = static_cast<u64>(state.range(0));
  const auto f = random_f(y);
  const auto one = CMFunction::constant(y, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(distance_sq(f, one, static_cast<double>(y)).value);
}
BENCHMARK(BM_DistanceSq)->Arg(10000)->Arg(100000);

static void BM_MinTwistedDistance(benchmark::State& state) {
  const auto f = random_f(10000);
  for (auto _ : state) benchmark::DoNotOptimize(min_twisted_distance(f, 1e4, 1.0).value);
}
BENCHMARK(BM_MinTwistedDistance);

static void BM_FriableLogMean(benchmark::State& state) {
  const auto f = random_f(100000);
  for (auto _ : state) benchmark::DoNotOptimize(friable_log_mean(f, 1e5, 1e3));
}
BENCHMARK(BM_FriableLogMean);
BENCHMARK_MAIN();
