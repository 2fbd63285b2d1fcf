#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "charbounds/charsum.hpp"
#include "charbounds/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charbounds;
using fixtures::cubic7;
using fixtures::quadratic;

TEST(MaxCharSum, QuadraticExamples) {
  EXPECT_NEAR(max_char_sum(quadratic(3)).value, 1.0, 1e-15);
  const auto r7 = max_char_sum(quadratic(7), true);
  EXPECT_NEAR(r7.value, 2.0, 1e-15);
  EXPECT_EQ(r7.argmax_t, 2u);
  const double trace7[] = {1, 2, 1, 2, 1, 0, 0};
  ASSERT_EQ(r7.partial_trace.size(), 7u);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(r7.partial_trace[i].real(), trace7[i], 1e-15);
  const auto r5 = max_char_sum(quadratic(5), true);
  EXPECT_NEAR(r5.value, 1.0, 1e-15);
  const double trace5[] = {1, 0, -1, 0, 0};
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(r5.partial_trace[i].real(), trace5[i], 1e-15);
}

TEST(MaxCharSum, PrincipalRejected) {
  EXPECT_THROW(max_char_sum(principal_character(build_group(10))), DomainError);
}

TEST(MaxCharSum, StreamingMatchesPrefixArray) {
  for (u64 q = 2; q <= 200; ++q)
    for (const auto& chi : enumerate_characters(build_group(q))) {
      if (chi.is_principal()) continue;
      const auto r = max_char_sum(chi);
      ASSERT_NEAR(r.value, oracle::max_partial_sum(chi), 1e-9) << q;
      std::complex<double> s(0.0, 0.0);
      for (u64 t = 1; t <= r.argmax_t; ++t) s += chi(static_cast<i64>(t));
      ASSERT_NEAR(std::abs(s), r.value, 1e-9);
    }
}

TEST(MaxCharSum, OneCharacterPerModulusTo10000) {
  for (u64 q = 3; q <= 10000; ++q) {
    const auto g = build_group(q);
    const auto chi = character_from_index(g, g->phi() - 1);
    if (chi.is_principal()) continue;
    ASSERT_NEAR(max_char_sum(chi).value, oracle::max_partial_sum(chi), 1e-9 * std::sqrt(q)) << q;
  }
}

TEST(GaussSum, Examples) {
  const auto t5 = gauss_sum(quadratic(5));
  EXPECT_NEAR(t5.real(), std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(t5.imag(), 0.0, 1e-12);
  const auto t1 = gauss_sum(principal_character(build_group(1)));
  EXPECT_NEAR(t1.real(), 1.0, 1e-15);
  EXPECT_NEAR(t1.imag(), 0.0, 1e-15);
  CharacterFilter prim;
  prim.primitive_only = true;
  for (const auto& chi : enumerate_characters(build_group(13), prim))
    EXPECT_NEAR(std::norm(gauss_sum(chi)), 13.0, 1e-8);
}

TEST(GaussSum, ModulusForPrimitiveUpTo120) {
  CharacterFilter prim;
  prim.primitive_only = true;
  for (u64 q = 1; q <= 120; ++q)
    for (const auto& chi : enumerate_characters(build_group(q), prim)) {
      const auto tau = gauss_sum(chi);
      ASSERT_LT(std::abs(std::norm(tau) - static_cast<double>(q)), 1e-6 * q) << q;
      ASSERT_LT(std::abs(tau - oracle::gauss_sum(chi)), 1e-9);
    }
}

TEST(Polya, Legendre7) {
  const auto chi = quadratic(7);
  EXPECT_LT(std::abs(polya_expansion(chi, 2, 49 * 49) - 2.0), 10.0);
  EXPECT_LT(std::abs(polya_expansion(chi, 2, 10000) - 2.0), 1.0);
}

TEST(Polya, FullPeriodAndSingleTerm) {
  const auto chi = quadratic(7);
  const double q = 7.0, N = 100.0;
  EXPECT_LE(std::abs(polya_expansion(chi, 7, 100)), 5.0 * (1.0 + q * std::log(q) / N));

  // chi mod 3, t = 1, N = 1: tau = i sqrt 3 and the bracket is 2 - 2 cos(2 pi/3) = 3.
  const auto v = polya_expansion(quadratic(3), 1, 1);
  EXPECT_NEAR(v.real(), 3.0 * std::sqrt(3.0) / (2.0 * oracle::kPi), 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(Polya, Errors) {
  EXPECT_THROW(polya_expansion(induce(quadratic(3), 9), 1, 10), DomainError);
  EXPECT_THROW(polya_expansion(quadratic(7), 0, 10), DomainError);
}

TEST(Polya, BatchMatchesDirect) {
  for (const u64 q : {5u, 12u, 21u, 37u}) {
    CharacterFilter prim;
    prim.primitive_only = true;
    for (const auto& chi : enumerate_characters(build_group(q), prim)) {
      const auto all = polya_expansion_all(chi, 3 * q + 2);
      for (u64 t = 1; t <= q; ++t)
        ASSERT_LT(std::abs(all[t - 1] - polya_expansion(chi, static_cast<i64>(t), 3 * q + 2)), 1e-10);
    }
  }
}

TEST(Polya, DefectBoundOnPilotRange) {
  CharacterFilter prim;
  prim.primitive_only = true;
  for (u64 q = 50; q <= 70; ++q) {
    const PolyaKernel kernel(q, q * q);
    for (const auto& chi : enumerate_characters(build_group(q), prim)) {
      const auto approx = kernel.expand_all(chi);
      std::complex<double> s(0.0, 0.0);
      for (u64 t = 1; t <= q; ++t) {
        s += chi(static_cast<i64>(t));
        ASSERT_LE(std::abs(s - approx[t - 1]), 5.0) << q;
      }
    }
  }
}

TEST(TwistedLogSum, OddQuadraticMod3) {
  const auto v = twisted_log_sum(quadratic(3), 0.0, 1e6);
  EXPECT_NEAR(v.real(), 1.209200, 1e-4);
  EXPECT_NEAR(v.real(), 2.0 * oracle::kPi / std::sqrt(27.0), 1e-5);
}

TEST(TwistedLogSum, EvenCharactersCancel) {
  for (u64 q = 3; q <= 60; ++q)
    for (const auto& chi : enumerate_characters(build_group(q)))
      if (chi.parity() == 1) ASSERT_EQ(twisted_log_sum(chi, 0.0, 500.0), std::complex<double>(0.0, 0.0));
}

TEST(TwistedLogSum, FriableRestriction) {
  const auto chi = quadratic(3);
  std::complex<double> expect(0.0, 0.0);
  for (int n = 1; n <= 64; n *= 2) expect += 2.0 * chi(n) / static_cast<double>(n);
  const auto got = twisted_log_sum(chi, 0.0, 100.0, 2.0);
  EXPECT_NEAR(got.real(), expect.real(), 1e-15);
  EXPECT_NEAR(got.imag(), 0.0, 1e-15);
}

TEST(TwistedLogSum, MatchesSymmetricSum) {
  const auto chi = cubic7();
  const double theta = 0.3183;
  std::complex<double> expect(0.0, 0.0);
  for (i64 n = -300; n <= 300; ++n)
    if (n != 0) expect += chi(n) * oracle::e(n * theta) / static_cast<double>(n);
  EXPECT_LT(std::abs(twisted_log_sum(chi, theta, 300.0) - expect), 1e-12);
}

TEST(DirichletArc, Examples) {
  const auto a = dirichlet_arc(1.0 / 3.0, 100, 10, 1000);
  EXPECT_EQ(a.b, 1);
  EXPECT_EQ(a.r, 3u);
  EXPECT_EQ(a.arc_class, ArcClass::major);
  EXPECT_EQ(a.N, 1000.0);

  const auto z = dirichlet_arc(0.0, 57, 5, 77);
  EXPECT_EQ(z.b, 0);
  EXPECT_EQ(z.r, 1u);
  EXPECT_EQ(z.N, 77.0);
  EXPECT_EQ(z.arc_class, ArcClass::major);

  // 55 is the smallest admissible denominator: |55 alpha - 34| < 1/100.
  const auto g = dirichlet_arc((std::sqrt(5.0) - 1.0) / 2.0, 100, 10, 1000);
  EXPECT_EQ(g.r, 55u);
  EXPECT_EQ(g.b, 34);
  EXPECT_EQ(g.arc_class, ArcClass::minor);
}

TEST(DirichletArc, InvariantsOnRandomAlpha) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const u64 R = 1 + rng() % 500;
    const u64 M = 1 + rng() % R;
    const u64 q = 1 + rng() % 10000;
    const auto a = dirichlet_arc(alpha, R, M, q);
    ASSERT_GE(a.r, 1u);
    ASSERT_LE(a.r, R);
    ASSERT_EQ(std::gcd(static_cast<u64>(std::abs(a.b)), a.r), 1u);
    ASSERT_LE(std::abs(alpha - static_cast<double>(a.b) / a.r), 1.0 / (a.r * static_cast<double>(R)) * (1 + 1e-9));
    ASSERT_EQ(a.arc_class == ArcClass::major, a.r <= M);
    const double d = std::abs(a.r * alpha - a.b);
    ASSERT_NEAR(a.N, std::min(static_cast<double>(q), 1.0 / d), 1e-9 * a.N);
    for (u64 r = 1; r < a.r; ++r)
      ASSERT_GT(std::abs(r * alpha - std::round(r * alpha)), 1.0 / R) << alpha << " " << R;
  }
}

TEST(GrSoIdentity, Examples) {
  EXPECT_LT(grso_identity_check(cubic7(), 1, 3, 10000, 10000).defect, 1e-8);
  const auto r5 = grso_identity_check(quadratic(5), 1, 4, 1000, 1000);
  EXPECT_LT(r5.defect, 1e-8);
  EXPECT_GT(r5.lhs, 0.0);
  const auto even = grso_identity_check(quadratic(5), 1, 1, 1000, 1000);
  EXPECT_EQ(even.lhs, 0.0);
  EXPECT_EQ(even.rhs_main, 0.0);
  EXPECT_THROW(grso_identity_check(cubic7(), 0, 3, 100, 100), DomainError);
  EXPECT_THROW(grso_identity_check(cubic7(), 2, 4, 100, 100), DomainError);
  EXPECT_THROW(grso_identity_check(cubic7(), 1, 14, 100, 100), DomainError);
}

TEST(GrSoIdentity, SmallGrid) {
  CharacterFilter prim;
  prim.primitive_only = true;
  for (const u64 q : {5u, 7u, 11u}) {
    for (const auto& chi : enumerate_characters(build_group(q), prim))
      for (u64 r = 1; r <= 12; ++r) {
        if (std::gcd(r, q) != 1) continue;
        for (const i64 b : {1, -1, 5}) {
          if (std::gcd(static_cast<u64>(std::abs(b)), r) != 1) continue;
          for (const double y : {3.0, 50.0}) {
            const auto rep = grso_identity_check(chi, b, r, 3000, y);
            ASSERT_LT(rep.defect, 1e-8 * r) << q << " r=" << r << " b=" << b << " y=" << y;
          }
        }
      }
  }
}
