#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "baselines.hpp"
#include "charbounds/errors.hpp"
#include "charbounds/euler.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charbounds;
using fixtures::quadratic;

namespace {

const double kL3 = oracle::kPi / std::sqrt(27.0);

}  // namespace

TEST(TruncatedL1, ClosedForms) {
  const auto v3 = truncated_L1(quadratic(3), 1e6);
  EXPECT_NEAR(v3.real(), kL3, 2e-3);
  EXPECT_NEAR(v3.imag(), 0.0, 1e-12);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_NEAR(truncated_L1(quadratic(5), 1e6).real(), 2.0 * std::log(golden) / std::sqrt(5.0), 2e-3);
  EXPECT_NEAR(truncated_L1(quadratic(3), 2.0).real(), 2.0 / 3.0, 1e-15);
  EXPECT_THROW(truncated_L1(principal_character(build_group(3)), 100.0), DomainError);
}

TEST(PartialSumL1, ClosedForms) {
  EXPECT_NEAR(partial_sum_L1(quadratic(3), 3).real(), 0.5, 1e-15);
  EXPECT_NEAR(partial_sum_L1(quadratic(3), 1000000).real(), kL3, 3e-6);
  EXPECT_NEAR(partial_sum_L1(quadratic(4), 1000000).real(), oracle::kPi / 4.0, 1e-5);
}

TEST(LValueKernel, MatchesDirect) {
  for (const u64 q : {3u, 8u, 15u, 28u}) {
    const LValueKernel kernel(q, 20000, 20000.0);
    for (const auto& chi : enumerate_characters(build_group(q))) {
      EXPECT_LT(std::abs(kernel.partial_sum(chi) - partial_sum_L1(chi, 20000)), 1e-11);
      if (chi.is_principal()) continue;
      EXPECT_LT(std::abs(kernel.log_euler_product(chi) - truncated_log_L1(chi, 20000.0)), 1e-11);
    }
  }
}

TEST(LValueKernel, PartialSumVersusEulerProduct) {
  const double bound = fixtures::baselines()["pvapp_bound"]["value"];
  for (u64 q = 3; q <= 60; ++q) {
    const LValueKernel kernel(q, 1000000, 1e6);
    for (const auto& chi : enumerate_characters(build_group(q))) {
      if (chi.is_principal()) continue;
      const auto diff = kernel.partial_sum(chi) - std::exp(kernel.log_euler_product(chi));
      ASSERT_LE(std::abs(diff), bound) << q << " " << chi.index();
    }
  }
}

TEST(KChi, Values) {
  EXPECT_EQ(k_chi_value({1.0, 0.0}, 7), std::complex<double>(0.0, 0.0));
  EXPECT_NEAR(k_chi_value({-1.0, 0.0}, 3).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(k_chi_value({-1.0, 0.0}, 3).imag(), 0.0, 1e-15);
  const double C = fixtures::baselines()["k_chi_C"]["value"];
  const auto ki = k_chi_value({0.0, 1.0}, 5);
  EXPECT_LT(std::abs(ki), 1.0);
  EXPECT_LT(std::abs(ki), C / 5.0);
}

TEST(KChi, VanishesOnKernelAndBounded) {
  const double C = fixtures::baselines()["k_chi_C"]["value"];
  for (u64 q = 3; q <= 40; ++q)
    for (const auto& chi : enumerate_characters(build_group(q)))
      for (const u64 p : oracle::naive_primes(200)) {
        const auto k = k_chi(chi, p);
        const auto v = chi(static_cast<i64>(p));
        if (std::abs(v - 1.0) < 1e-12 || std::abs(v) < 1e-12) {
          ASSERT_EQ(k, std::complex<double>(0.0, 0.0));
        }
        ASSERT_LE(std::abs(k), C / static_cast<double>(p));
        // -log(1 - k/p) + log(1 - chi(p)/p) = chi(p) log(1 - 1/p)
        const double pd = static_cast<double>(p);
        const auto lhs = -std::log(1.0 - k / pd) + std::log(1.0 - v / pd);
        ASSERT_LT(std::abs(lhs - v * std::log1p(-1.0 / pd)), 1e-12);
      }
}

TEST(Mertens, ConstantsAgainstExtrapolation) {
  const auto primes = oracle::sieve(10000000);
  for (const auto& [m, a] : std::vector<std::pair<u64, u64>>{{3, 1}, {4, 3}}) {
    const double c = mertens_constant(m, a, 1e6);
    EXPECT_NEAR(c, -oracle::mertens_oracle(primes, m, a, 1e6, 1e7), 5e-3) << m << " " << a;
  }
}

TEST(Mertens, SumOverResidues) {
  for (const u64 m : {3u, 4u, 5u, 12u, 30u}) {
    const auto all = mertens_constants_all(m, 1e5);
    double total = 0.0;
    for (u64 a = 0; a < m; ++a) {
      if (std::gcd(a, m) != 1) {
        EXPECT_TRUE(std::isnan(all[a].value));
        continue;
      }
      EXPECT_LT(std::abs(all[a].imag_residual), 1e-6);
      total += all[a].value;
    }
    const double phi = static_cast<double>(euler_phi(m));
    EXPECT_NEAR(total, -kEulerGamma - std::log(phi / static_cast<double>(m)), 1e-9) << m;
  }
  EXPECT_THROW(mertens_constant(4, 2, 1e4), DomainError);
}

TEST(Mertens, AverageGrowth) {
  const double c = fixtures::baselines()["mertens_average_c"]["value"];
  for (u64 m = 3; m <= 100; ++m) {
    const auto all = mertens_constants_all(m, 1e5);
    double total = 0.0;
    for (u64 a = 1; a < m; ++a)
      if (std::gcd(a, m) == 1) total += std::abs(all[a].value);
    ASSERT_LE(total, c * std::log(std::log(static_cast<double>(m)))) << m;
  }
}

TEST(MertensAP, Examples) {
  const auto r = mertens_ap(100.0, 4, 1);
  double recip = 0.0;
  for (const u64 p : oracle::naive_primes(100))
    if (p % 4 == 1) recip += 1.0 / static_cast<double>(p);
  EXPECT_NEAR(recip, 0.492152, 1e-6);
  EXPECT_GT(r.value, recip);
  EXPECT_NEAR(r.main_term, std::log(std::log(100.0)) / 2.0, 1e-15);
  EXPECT_NEAR(r.constant_estimate, r.value - r.main_term, 1e-15);

  EXPECT_NEAR(mertens_ap(10.0, 1, 0).value, std::log(2.0 * 1.5 * 1.25 * 7.0 / 6.0), 1e-14);

  const auto lo = mertens_ap(1e6, 3, 2), hi = mertens_ap(1e7, 3, 2);
  EXPECT_NEAR(hi.value - lo.value, (std::log(std::log(1e7)) - std::log(std::log(1e6))) / 2.0, 1e-2);
  EXPECT_TRUE(lo.in_regime);
  EXPECT_FALSE(mertens_ap(100.0, 7, 1).in_regime);
}

TEST(CharsumL1, Examples) {
  const auto one = principal_character(build_group(1));
  const auto rep = charsum_L1_functional(quadratic(3), one, 1e6);
  EXPECT_NEAR(rep.rhs_main, std::sqrt(3.0) * kL3, 2e-3 * std::sqrt(3.0));
  EXPECT_NEAR(rep.lhs, 1.0 + std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(rep.ratio, 2.61, 0.01);
  EXPECT_THROW(charsum_L1_functional(quadratic(5), one, 1e4), DomainError);
}

TEST(CharsumL1, FrozenMinimumRatio) {
  const double frozen = fixtures::baselines()["charsum_L1_min_ratio"]["value"];
  const u64 qmax = fixtures::baselines()["charsum_L1_min_ratio"]["q_max"];
  const double X = fixtures::baselines()["charsum_L1_min_ratio"]["X"];
  const auto one = principal_character(build_group(1));
  CharacterFilter f;
  f.order_equals = 2;
  f.parity = -1;
  f.primitive_only = true;
  double lowest = 1e300;
  for (u64 q = 3; q <= qmax; ++q) {
    if (!may_have_characters(q, f)) continue;
    for (const auto& chi : enumerate_characters(build_group(q), f))
      lowest = std::min(lowest, charsum_L1_functional(chi, one, X).ratio);
  }
  EXPECT_GE(lowest, 0.8 * frozen);
}
