#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "charbounds/dirichlet.hpp"
#include "charbounds/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace charbounds;
using fixtures::cubic7;
using fixtures::quadratic;

TEST(BuildGroup, Mod7HasGenerator3) {
  const auto g = build_group(7);
  ASSERT_EQ(g->components().size(), 1u);
  EXPECT_EQ(g->components()[0].generator, 3u);
  EXPECT_EQ(g->components()[0].order, 6u);
  EXPECT_EQ(g->phi(), 6u);
}

TEST(BuildGroup, TrivialAndComposite) {
  const auto g1 = build_group(1);
  EXPECT_TRUE(g1->components().empty());
  EXPECT_EQ(g1->phi(), 1u);

  const auto g15 = build_group(15);
  ASSERT_EQ(g15->components().size(), 2u);
  EXPECT_EQ(g15->components()[0].modulus, 3u);
  EXPECT_EQ(g15->components()[0].generator, 2u);
  EXPECT_EQ(g15->components()[0].order, 2u);
  EXPECT_EQ(g15->components()[1].modulus, 5u);
  EXPECT_EQ(g15->components()[1].generator, 2u);
  EXPECT_EQ(g15->components()[1].order, 4u);
  EXPECT_EQ(g15->phi(), 8u);
}

TEST(BuildGroup, PowerOfTwoSplit) {
  const auto g = build_group(32);
  ASSERT_EQ(g->components().size(), 2u);
  EXPECT_EQ(g->components()[0].generator, 31u);
  EXPECT_EQ(g->components()[0].order, 2u);
  EXPECT_EQ(g->components()[1].generator, 5u);
  EXPECT_EQ(g->components()[1].order, 8u);
}

TEST(BuildGroup, Errors) {
  EXPECT_THROW(build_group(0), DomainError);
  EXPECT_THROW(build_group(DirichletGroup::kSweepLimit + 1), CapacityError);
}

TEST(BuildGroup, InvariantsUpTo400) {
  for (u64 q = 1; q <= 400; ++q) {
    const auto g = build_group(q);
    u64 phi = 1, prod = 1, last_mod = 0;
    for (std::size_t j = 0; j < g->components().size(); ++j) {
      const auto& c = g->components()[j];
      phi *= c.order;
      if (c.modulus != last_mod) prod *= c.modulus;
      last_mod = c.modulus;
      EXPECT_EQ(oracle::mult_order(c.generator, c.modulus), c.order) << q;
      u64 x = 1;
      for (u64 e = 0; e < c.order; ++e) {
        EXPECT_EQ(g->dlog(j, static_cast<i64>(x)), e) << "q=" << q << " j=" << j;
        x = x * c.generator % c.modulus;
      }
    }
    // (Z/2Z)^* is trivial and contributes no component.
    EXPECT_EQ(q % 4 == 2 ? 2 * prod : prod, q);
    EXPECT_EQ(phi, euler_phi(q));
    EXPECT_EQ(g->phi(), phi);
  }
}

TEST(Eval, LegendreMod7) {
  const auto chi = quadratic(7);
  EXPECT_EQ(chi.value(2), CharValue::unit(RootOfUnity(0, 1)));
  for (i64 n = -20; n <= 20; ++n)
    EXPECT_NEAR(chi(n).real(), oracle::legendre(n, 7), 1e-15) << n;
}

TEST(Eval, IdentityAndCubic) {
  for (const auto& chi : enumerate_characters(build_group(36))) EXPECT_EQ(chi(1), std::complex<double>(1.0, 0.0));
  const auto chi = cubic7();
  EXPECT_EQ(chi.value(5), CharValue::unit(RootOfUnity(2, 3)));
  EXPECT_TRUE(chi.value(14).is_zero());
}

TEST(Eval, ValuesAreExactRoots) {
  const auto chi = cubic7();
  EXPECT_EQ(chi.value(3).root(), RootOfUnity(1, 3));
  EXPECT_EQ(chi.value(-3).root(), RootOfUnity(1, 3));
  EXPECT_EQ(RootOfUnity(4, 6), RootOfUnity(2, 3));
  EXPECT_EQ(RootOfUnity(1, 3).pow(3), RootOfUnity(0, 1));
}

TEST(Enumerate, CountsAndFilters) {
  const auto g7 = build_group(7);
  EXPECT_EQ(enumerate_characters(g7).size(), 6u);
  CharacterFilter cubic;
  cubic.order_equals = 3;
  const auto cs = enumerate_characters(g7, cubic);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].exponents(), std::vector<u64>{2});
  EXPECT_EQ(cs[1].exponents(), std::vector<u64>{4});

  CharacterFilter prim;
  prim.primitive_only = true;
  EXPECT_EQ(enumerate_characters(build_group(8), prim).size(), 2u);
}

TEST(Enumerate, FiltersAreExactAndIndexed) {
  for (u64 q = 1; q <= 120; ++q) {
    const auto g = build_group(q);
    const auto all = enumerate_characters(g);
    ASSERT_EQ(all.size(), euler_phi(q));
    for (u64 i = 0; i < all.size(); ++i) {
      EXPECT_EQ(all[i].index(), i);
      EXPECT_EQ(character_from_index(g, i), all[i]);
      if (i > 0) EXPECT_LT(all[i - 1].exponents(), all[i].exponents());
    }
    for (const u64 d : {2u, 3u, 4u, 6u}) {
      CharacterFilter f;
      f.order_divides = d;
      f.primitive_only = true;
      const auto got = enumerate_characters(g, f);
      std::size_t expect = 0;
      for (const auto& chi : all)
        if (d % chi.order() == 0 && chi.is_primitive()) ++expect;
      EXPECT_EQ(got.size(), expect) << q << " " << d;
      EXPECT_EQ(may_have_characters(q, f), expect > 0) << q << " " << d;
    }
    CharacterFilter odd;
    odd.parity = -1;
    for (const auto& chi : enumerate_characters(g, odd)) EXPECT_EQ(chi(-1).real(), -1.0);
  }
}

TEST(Invariants, PrincipalMod12) {
  const auto inv = character_invariants(principal_character(build_group(12)));
  EXPECT_EQ(inv.conductor, 1u);
  EXPECT_EQ(inv.order, 1u);
  EXPECT_EQ(inv.parity, 1);
  EXPECT_FALSE(inv.primitive);
}

TEST(Invariants, LegendreMod5AndInducedMod9) {
  const auto inv = character_invariants(quadratic(5));
  EXPECT_EQ(inv.conductor, 5u);
  EXPECT_EQ(inv.order, 2u);
  EXPECT_EQ(inv.parity, 1);
  EXPECT_TRUE(inv.primitive);

  const auto induced = induce(quadratic(3), 9);
  EXPECT_EQ(induced.conductor(), 3u);
  EXPECT_FALSE(induced.is_primitive());
}

TEST(Invariants, ConductorMatchesOracles) {
  for (u64 q = 1; q <= 200; ++q)
    for (const auto& chi : enumerate_characters(build_group(q))) {
      const u64 c = oracle::conductor(chi);
      ASSERT_EQ(chi.conductor(), c) << "q=" << q << " idx=" << chi.index();
      ASSERT_EQ(conductor_by_constancy(chi), c);
    }
}

TEST(Invariants, OrderAndParity) {
  for (u64 q = 1; q <= 150; ++q) {
    const auto g = build_group(q);
    for (const auto& chi : enumerate_characters(g)) {
      u64 ord = 1;
      for (std::size_t j = 0; j < g->components().size(); ++j) {
        const u64 oj = g->components()[j].order;
        ord = std::lcm(ord, oj / std::gcd(oj, chi.exponents()[j]));
      }
      EXPECT_EQ(chi.order(), ord);
      EXPECT_EQ(static_cast<double>(chi.parity()), chi(-1).real());
      if (chi.order() % 2 == 1) EXPECT_EQ(chi.parity(), 1);
    }
  }
}

TEST(Properties, Orthogonality) {
  for (u64 q = 1; q <= 100; ++q) {
    const auto chars = enumerate_characters(build_group(q));
    std::vector<u64> units;
    for (u64 a = 1; a <= q; ++a)
      if (std::gcd(a, q) == 1) units.push_back(a % q);
    for (const u64 a : units)
      for (const u64 b : units) {
        std::complex<double> s(0.0, 0.0);
        for (const auto& chi : chars) s += chi(static_cast<i64>(a)) * std::conj(chi(static_cast<i64>(b)));
        const double expect = a == b ? static_cast<double>(euler_phi(q)) : 0.0;
        ASSERT_NEAR(s.real(), expect, 1e-10) << q << " " << a << " " << b;
        ASSERT_NEAR(s.imag(), 0.0, 1e-10);
      }
  }
}

TEST(Properties, CompleteMultiplicativity) {
  std::mt19937_64 rng(20240607);
  for (u64 q = 1; q <= 50; ++q)
    for (const auto& chi : enumerate_characters(build_group(q)))
      for (int trial = 0; trial < 20; ++trial) {
        const i64 m = static_cast<i64>(rng() % 2000) - 1000;
        const i64 n = static_cast<i64>(rng() % 2000) - 1000;
        const auto vm = chi.value(m), vn = chi.value(n), vmn = chi.value(m * n);
        if (vm.is_zero() || vn.is_zero()) {
          EXPECT_TRUE(vmn.is_zero());
        } else {
          ASSERT_FALSE(vmn.is_zero());
          EXPECT_EQ(vmn.root(), vm.root() * vn.root());
        }
        EXPECT_EQ(vm.is_zero(), std::gcd(static_cast<u64>(std::abs(m)), q) != 1);
      }
}

TEST(Induce, Examples) {
  const auto chi = induce(quadratic(3), 9);
  EXPECT_EQ(chi.modulus(), 9u);
  EXPECT_EQ(chi(2).real(), -1.0);
  for (i64 k = 0; k < 9; ++k) EXPECT_TRUE(chi.value(3 * k).is_zero());
  const auto q5 = quadratic(5);
  EXPECT_EQ(induce(q5, 5), q5);
  EXPECT_TRUE(induce(principal_character(build_group(1)), 6).is_principal());
  EXPECT_EQ(induce(principal_character(build_group(1)), 6), principal_character(build_group(6)));
  EXPECT_THROW(induce(q5, 12), DomainError);
}

TEST(Induce, InducerRoundTrip) {
  for (u64 f = 1; f <= 30; ++f) {
    CharacterFilter prim;
    prim.primitive_only = true;
    for (const auto& chi : enumerate_characters(build_group(f), prim))
      for (u64 q = f; q <= 300; q += f) {
        const auto up = induce(chi, q);
        ASSERT_EQ(primitive_inducer(up), chi) << f << " -> " << q;
        for (i64 n = 1; n <= 40; ++n) {
          if (std::gcd(static_cast<u64>(n), q) == 1)
            ASSERT_EQ(up.value(n), chi.value(n));
          else
            ASSERT_TRUE(up.value(n).is_zero());
        }
      }
  }
}

TEST(InducedSolutions, Examples) {
  CharacterFilter prim_quad;
  prim_quad.primitive_only = true;
  prim_quad.order_equals = 2;
  const auto xi15 = enumerate_characters(build_group(15), prim_quad).at(0);
  const auto r = count_induced_solutions(xi15, quadratic(3));
  EXPECT_EQ(r.count, 1u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(lift(multiply(*r.witness, quadratic(3)), xi15.group_ptr()), xi15);

  const auto psi7 = quadratic(7);
  EXPECT_EQ(count_induced_solutions(xi15, psi7).count, 0u);

  const auto one = principal_character(build_group(1));
  const auto r1 = count_induced_solutions(xi15, one);
  EXPECT_EQ(r1.count, 1u);
  EXPECT_EQ(*r1.witness, xi15);
}

TEST(CharacterTable, AgreesWithEval) {
  for (u64 q = 1; q <= 60; ++q)
    for (const auto& chi : enumerate_characters(build_group(q))) {
      const CharacterTable t(chi);
      for (i64 n = -q; n <= static_cast<i64>(2 * q); ++n) ASSERT_EQ(t(n), chi(n));
    }
}
