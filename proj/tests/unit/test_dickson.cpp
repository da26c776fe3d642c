#include <gtest/gtest.h>

#include "mcm/dickson.hpp"
#include "oracle.hpp"

using namespace mcm;

namespace {

bool binom_odd(std::uint64_t a, std::uint64_t b) { return b <= a && (b & ~a) == 0; }

// Coefficients of D_k over GF(2) from the explicit sum
// D_k(x) = sum_i k/(k-i) binom(k-i, i) x^(k-2i), with k/(k-i) binom(k-i,i) = binom(k-i,i) + binom(k-i-1,i-1).
std::vector<std::uint64_t> dickson_oracle(unsigned k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  if (k == 0) return {};
  for (unsigned i = 0; 2 * i <= k; ++i) {
    bool odd = binom_odd(k - i, i);
    if (i >= 1) odd ^= binom_odd(k - i - 1, i - 1);
    c[k - 2 * i] = odd;
  }
  return c;
}

}  // namespace

TEST(Dickson, SmallCases) {
  const auto& F = FieldContext::make(1);
  EXPECT_TRUE(dickson_poly(0, F).is_zero());
  EXPECT_EQ(to_text(dickson_poly(1, F)), "0x0,0x1");
  EXPECT_EQ(to_text(dickson_poly(2, F)), "0x0,0x0,0x1");
  EXPECT_EQ(to_text(dickson_poly(3, F)), "0x0,0x1,0x0,0x1");
  EXPECT_EQ(to_text(dickson_poly(5, F)), "0x0,0x1,0x0,0x1,0x0,0x1");
}

TEST(Dickson, RecurrenceMatchesExplicitSum) {
  const auto& F = FieldContext::make(1);
  for (unsigned k = 1; k <= 300; ++k) {
    EXPECT_EQ(UPoly(F, dickson_oracle(k)), dickson_poly(k, F)) << k;
  }
}

TEST(Dickson, FunctionalEquation) {
  oracle::Gen g(21);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto& F = FieldContext::make(2 * n);
    for (unsigned k : {1u, 2u, 3u, 7u, 17u, 33u, 65u}) {
      const UPoly d = dickson_poly(k, F);
      for (int i = 0; i < 20; ++i) {
        const FieldElem u = F.elem(g.nonzero(2 * n));
        EXPECT_EQ(d(ang(u)), u.pow(k) + u.inv().pow(k));
      }
    }
  }
}

TEST(Dickson, ClosedFormsForQPlusMinusOne) {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto& F = FieldContext::make(n);
    const unsigned q = 1u << n;
    EXPECT_EQ(dickson_qm1_closed(n, F), dickson_poly(q - 1, F)) << n;
    EXPECT_EQ(dickson_qp1_closed(n, F), dickson_poly(q + 1, F)) << n;
    EXPECT_TRUE(verify_closed_forms(n).pass);
  }
  const auto& F = FieldContext::make(2);
  EXPECT_EQ(to_text(dickson_qm1_closed(2, F)), "0x0,0x1,0x0,0x1");
}

TEST(Dickson, Relations) {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto r = verify_dickson_relations(n, 8, n);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
}

TEST(Mcm, PolynomialsForSmallQ) {
  const auto& F = FieldContext::make(2);
  EXPECT_EQ(to_text(t_poly(2, F)), "0x1,0x1");
  EXPECT_EQ(to_text(c_poly(2, F)), "0x0,0x1,0x1,0x0,0x0,0x1,0x1");
  EXPECT_EQ(to_text(t_rev_poly(2, F)), "0x1,0x1");
  const auto& F3 = FieldContext::make(3);
  EXPECT_EQ(to_text(t_poly(3, F3)), "0x1,0x1,0x0,0x1");
  EXPECT_EQ(to_text(t_rev_poly(3, F3)), "0x1,0x0,0x1,0x1");
  EXPECT_THROW(c_poly(1, FieldContext::make(1)), std::invalid_argument);
}

TEST(Mcm, DegreeAndCoefficients) {
  for (unsigned n = 2; n <= 6; ++n) {
    const auto& F = FieldContext::make(n);
    const UPoly c = c_poly(n, F);
    const int q = 1 << n;
    EXPECT_EQ(c.degree(), (q / 2) * (q - 1));
    for (auto v : c.raw()) EXPECT_LE(v, 1u);
    EXPECT_TRUE(c.coeff(0).is_zero());
    EXPECT_TRUE(c.coeff(1).is_one());
  }
}

TEST(Mcm, EvaluationAgreesEverywhere) {
  oracle::Gen g(22);
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned m : {3u, 8u, 13u}) {
      const auto& F = FieldContext::make(m);
      const UPoly c = c_poly(n, F);
      for (int i = 0; i < 30; ++i) {
        const FieldElem x = F.elem(g.bits(m));
        EXPECT_EQ(c_eval(n, x), c(x));
        EXPECT_EQ(c_eval(n, x).bits(), oracle::c_value(n, x.bits(), m, F.modulus()));
      }
    }
  }
}

TEST(Mcm, PerturbationIsDetected) {
  EXPECT_FALSE(verify_closed_forms(3, Perturb::rhs).pass);
  const auto r = verify_dickson_relations(3, 4, 0, Perturb::rhs);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.counterexample.has_value());
}
