#include <gtest/gtest.h>

#include <set>

#include "mcm/gf2.hpp"
#include "oracle.hpp"

using namespace mcm;

TEST(Field, DefaultModuli) {
  EXPECT_EQ(FieldContext::default_modulus(1), u128{0x3});
  EXPECT_EQ(FieldContext::default_modulus(2), u128{0x7});
  EXPECT_EQ(FieldContext::default_modulus(3), u128{0xb});
  EXPECT_EQ(FieldContext::default_modulus(4), u128{0x13});
  EXPECT_EQ(FieldContext::default_modulus(8), u128{0x11b});
  EXPECT_EQ(FieldContext::default_modulus(64), (u128{1} << 64) | 0x1b);
}

TEST(Field, DefaultModulusIsSmallestIrreducible) {
  for (unsigned m = 1; m <= 16; ++m) {
    const u128 f = FieldContext::default_modulus(m);
    EXPECT_TRUE(oracle::irreducible2(static_cast<std::uint64_t>(f)));
    for (std::uint64_t g = (std::uint64_t{1} << m) | 1; g < f; g += 2) EXPECT_FALSE(oracle::irreducible2(g)) << m;
  }
}

TEST(Field, InterningAndRejection) {
  EXPECT_EQ(&FieldContext::make(5), &FieldContext::make(5, 0x25));
  EXPECT_NE(&FieldContext::make(4), &FieldContext::make(4, 0x19));
  EXPECT_THROW(FieldContext::make(4, 0x15), std::invalid_argument);
  EXPECT_THROW(FieldContext::make(4, 0x7), std::invalid_argument);
  EXPECT_THROW(FieldContext::make(0), std::invalid_argument);
  EXPECT_THROW(FieldContext::make(65), std::invalid_argument);
}

TEST(Field, MultiplicationMatchesBitSerialOracle) {
  oracle::Gen g(1);
  for (unsigned m : {1u, 2u, 3u, 7u, 8u, 13u, 16u, 17u, 24u, 31u, 32u, 33u, 48u, 63u, 64u}) {
    const auto& F = FieldContext::make(m);
    for (int i = 0; i < 300; ++i) {
      const auto a = g.bits(m), b = g.bits(m);
      ASSERT_EQ(F.mul(a, b), oracle::mul(a, b, m, F.modulus())) << "m=" << m;
    }
  }
}

TEST(Field, NonDefaultModulus) {
  const auto& F = FieldContext::make(8, 0x11d);
  oracle::Gen g(2);
  for (int i = 0; i < 200; ++i) {
    const auto a = g.bits(8), b = g.bits(8);
    ASSERT_EQ(F.mul(a, b), oracle::mul(a, b, 8, 0x11d));
  }
}

TEST(Field, InverseAndPowerLaws) {
  oracle::Gen g(3);
  for (unsigned m : {2u, 5u, 16u, 20u, 40u, 64u}) {
    const auto& F = FieldContext::make(m);
    for (int i = 0; i < 100; ++i) {
      const FieldElem x = F.elem(g.nonzero(m));
      EXPECT_TRUE((x * x.inv()).is_one());
      EXPECT_TRUE(x.pow(F.group_order()).is_one());
      const auto e1 = g.rng() % 1000, e2 = g.rng() % 1000;
      EXPECT_EQ(x.pow(e1) * x.pow(e2), x.pow(e1 + e2));
      EXPECT_EQ(x.pow(e1), F.elem(oracle::pow(x.bits(), e1, m, F.modulus())));
    }
    EXPECT_THROW(F.zero().inv(), std::domain_error);
  }
}

TEST(Field, GeneratorIsSmallestPrimitive) {
  for (unsigned m = 1; m <= 12; ++m) {
    const auto& F = FieldContext::make(m);
    const std::uint64_t order = F.group_order();
    auto primitive = [&](std::uint64_t v) {
      std::uint64_t x = v;
      for (std::uint64_t k = 1; k < order; ++k) {
        if (x == 1) return false;
        x = oracle::mul(x, v, m, F.modulus());
      }
      return x == 1;
    };
    std::uint64_t want = 1;
    while (!primitive(want)) ++want;
    EXPECT_EQ(F.generator().bits(), want) << m;
    EXPECT_EQ(F.element_order(want), order);
  }
}

TEST(Field, TraceMatchesFrobeniusSum) {
  oracle::Gen g(4);
  for (unsigned m : {1u, 2u, 3u, 9u, 16u, 33u, 64u}) {
    const auto& F = FieldContext::make(m);
    for (int i = 0; i < 100; ++i) {
      const auto a = g.bits(m);
      EXPECT_EQ(F.trace(a), oracle::trace(a, m, F.modulus()));
    }
  }
}

TEST(Field, TraceIsBalanced) {
  const auto& F = FieldContext::make(10);
  int ones = 0;
  for (const auto& x : F.elements()) ones += trace_abs(x);
  EXPECT_EQ(ones, 512);
}

TEST(Field, SqrtAndFrobenius) {
  oracle::Gen g(5);
  for (unsigned m : {1u, 4u, 11u, 32u, 64u}) {
    const auto& F = FieldContext::make(m);
    for (int i = 0; i < 50; ++i) {
      const FieldElem x = F.elem(g.bits(m));
      EXPECT_EQ(sqrt(x).square(), x);
      EXPECT_EQ(x.frobenius(m), x);
      EXPECT_EQ(x.frobenius(1), x.square());
    }
  }
}

TEST(Field, ArtinSchreier) {
  oracle::Gen g(6);
  for (unsigned m : {1u, 2u, 5u, 8u, 21u, 64u}) {
    const auto& F = FieldContext::make(m);
    for (int i = 0; i < 100; ++i) {
      const FieldElem c = F.elem(g.bits(m));
      const auto sol = solve_artin_schreier(c);
      ASSERT_EQ(sol.has_value(), trace_abs(c) == 0);
      if (sol) {
        EXPECT_EQ(sol->first.square() + sol->first, c);
        EXPECT_EQ(sol->second, sol->first + F.one());
      }
    }
  }
}

TEST(Field, AngleBracket) {
  const auto& F = FieldContext::make(6);
  for (const auto& x : F.elements()) {
    if (x.is_zero()) {
      EXPECT_THROW(ang(x), std::domain_error);
      continue;
    }
    EXPECT_EQ(ang(x), ang(x.inv()));
    EXPECT_EQ(ang(x), x + x.inv());
  }
}

TEST(Field, ContextMismatchThrows) {
  const auto a = FieldContext::make(3).one();
  const auto b = FieldContext::make(4).one();
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(a * b, ContextMismatch);
}

TEST(Embedding, IsAnInjectiveHomomorphism) {
  oracle::Gen g(8);
  const std::pair<unsigned, unsigned> towers[] = {{1, 4}, {2, 4}, {2, 6}, {3, 12}, {4, 8}, {5, 20}, {8, 24}, {16, 32}, {6, 6}};
  for (const auto& [s, t] : towers) {
    const auto& sub = FieldContext::make(s);
    const auto& sup = FieldContext::make(t);
    const auto& e = Embedding::get(sub, sup);
    EXPECT_EQ(&e, &Embedding::get(sub, sup));
    for (int i = 0; i < 100; ++i) {
      const FieldElem x = sub.elem(g.bits(s)), y = sub.elem(g.bits(s));
      EXPECT_EQ(e(x + y), e(x) + e(y));
      EXPECT_EQ(e(x * y), e(x) * e(y));
      EXPECT_EQ(e.preimage(e(x)), x);
    }
    EXPECT_TRUE(e(sub.one()).is_one());
  }
}

TEST(Embedding, PreimageRecognizesTheSubfield) {
  const auto& sub = FieldContext::make(3);
  const auto& sup = FieldContext::make(6);
  const auto& e = Embedding::get(sub, sup);
  int inside = 0;
  for (const auto& y : sup.elements()) {
    const bool fixed = y.frobenius(3) == y;
    EXPECT_EQ(e.preimage(y).has_value(), fixed);
    inside += fixed;
  }
  EXPECT_EQ(inside, 8);
}

TEST(Embedding, RejectsNonDivisor) {
  EXPECT_THROW(Embedding::get(FieldContext::make(3), FieldContext::make(4)), std::invalid_argument);
}

TEST(Subgroups, MuAndTraceSets) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto& amb = FieldContext::make(2 * n);
    const auto mu = mu_subgroup(n, amb);
    const std::uint64_t q = std::uint64_t{1} << n;
    ASSERT_EQ(mu.size(), q + 1);
    EXPECT_TRUE(mu[0].is_one());
    std::set<std::uint64_t> seen;
    for (const auto& z : mu) {
      EXPECT_TRUE(z.pow(q + 1).is_one());
      seen.insert(z.bits());
    }
    EXPECT_EQ(seen.size(), q + 1);
    const auto& fq = FieldContext::make(n);
    EXPECT_EQ(fq_one_set(n, fq).size(), q / 2);
    EXPECT_EQ(fq_zero_set(n, fq).size(), q / 2);
  }
}

TEST(Text, ParseAndFormat) {
  EXPECT_EQ(parse_field("2^8").describe(), "2^8/0x11b");
  EXPECT_EQ(&parse_field("2^8/0x11d"), &FieldContext::make(8, 0x11d));
  const auto& F = FieldContext::make(8);
  EXPECT_EQ(parse_elem(F, "0xff").bits(), 0xffu);
  EXPECT_EQ(to_hex(F.elem(0x1b)), "0x1b");
  EXPECT_EQ(to_hex(std::uint64_t{0}), "0x0");
  EXPECT_THROW(parse_elem(F, "0x100"), std::invalid_argument);
  EXPECT_THROW(parse_elem(F, "zz"), std::invalid_argument);
  EXPECT_THROW(parse_field("3^2"), std::invalid_argument);
  EXPECT_THROW(parse_field("2^x"), std::invalid_argument);
  oracle::Gen g(9);
  for (int i = 0; i < 50; ++i) {
    const auto v = g.rng();
    EXPECT_EQ(parse_elem(FieldContext::make(64), to_hex(v)).bits(), v);
  }
}
