#include <gtest/gtest.h>

#include "mcm/dickson.hpp"
#include "mcm/identities.hpp"
#include "mcm/splitting.hpp"
#include "oracle.hpp"

using namespace mcm;

namespace {

FieldElem dickson_at(unsigned k, const FieldElem& x) {
  FieldElem prev = x.field().zero(), cur = x;
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    FieldElem next = x * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(BiPoly, Arithmetic) {
  const auto& F = FieldContext::make(2);
  const UPoly one = UPoly::constant(F.one()), y = UPoly::x(F);
  const BiPoly a(F, {y, one});  // X + Y
  const BiPoly b(F, {one, y});  // Y X + 1
  const BiPoly p = a * b;
  EXPECT_EQ(p.degree_x(), 2);
  EXPECT_EQ(p.degree_y(), 2);
  EXPECT_EQ(p.coeff(0), y);
  EXPECT_EQ(p.coeff(1), y * y + one);
  EXPECT_EQ(p.coeff(2), y);
  EXPECT_TRUE(p.coeff(7).is_zero());
  EXPECT_EQ(p.nonzero_terms(), 3u);
  EXPECT_EQ((a + a).degree_x(), -1);
}

TEST(MainIdentity, HoldsForSmallQ) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = verify_main_identity(n);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
}

TEST(MainIdentity, PointwiseInAnExtension) {
  oracle::Gen g(31);
  for (unsigned n = 2; n <= 4; ++n) {
    const auto& fq = FieldContext::make(n);
    const auto& L = FieldContext::make(4 * n);
    const auto& emb = Embedding::get(fq, L);
    const std::uint64_t q = 1ULL << n;
    for (int t = 0; t < 10; ++t) {
      const FieldElem X = L.elem(g.bits(4 * n)), Y = L.elem(g.bits(4 * n));
      FieldElem lhs = L.one();
      for (const auto& w : fq.elements()) {
        if (!w.is_zero()) lhs *= dickson_at(static_cast<unsigned>(q + 1), emb(w) * X) + Y;
      }
      FieldElem mid = L.zero();
      for (unsigned i = 1; i <= n; ++i) mid += Y.pow(q - (1ULL << i));
      EXPECT_EQ(lhs, X.pow(q * q - 1) + mid * X.pow(q - 1) + Y.pow(q - 1));
    }
  }
}

TEST(MainIdentity, SidesDifferUnderPerturbation) {
  const auto [lhs, rhs] = main_identity_sides(2, Perturb::rhs);
  EXPECT_NE(lhs, rhs);
  const auto r = verify_main_identity(2, Perturb::rhs);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(CjProduct, SymbolicAndPointwise) {
  for (unsigned n = 2; n <= 5; ++n) EXPECT_TRUE(verify_cj_product(n).pass) << n;
  EXPECT_FALSE(verify_cj_product(3, Perturb::rhs).pass);

  oracle::Gen g(32);
  for (unsigned n = 2; n <= 4; ++n) {
    const auto& fq = FieldContext::make(n);
    const auto& L = FieldContext::make(3 * n);
    const auto& emb = Embedding::get(fq, L);
    const std::uint64_t q = 1ULL << n;
    for (int t = 0; t < 10; ++t) {
      const FieldElem y = L.elem(g.bits(3 * n));
      FieldElem lhs = L.one();
      for (const auto& c : fq.elements()) {
        if (c.is_zero()) continue;
        for (const auto& j : fq_one_set(n, fq)) lhs *= emb(c) * y * y + y + emb(j / c);
      }
      EXPECT_EQ(lhs, L.one() + (y.pow(q) + y).pow(q - 1));
    }
  }
}

TEST(ETransforms, HoldForSmallQ) {
  for (unsigned n = 2; n <= 4; ++n) {
    const auto r = verify_e_transformations(n);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
  EXPECT_FALSE(verify_e_transformations(2, Perturb::rhs).pass);
}

TEST(RationalFn, CompositionAndReciprocal) {
  const auto& F = FieldContext::make(3);
  const UPoly one = UPoly::constant(F.one()), y = UPoly::x(F);
  const RationalFn f{y + one, y * y};
  EXPECT_EQ(f.compose(y + one), (RationalFn{y, (y + one) * (y + one)}));
  EXPECT_EQ(f.reciprocal(), (RationalFn{y + y * y, one}));
  EXPECT_EQ((RationalFn{y * (y + one), y * y}), (RationalFn{y + one, y}));
  EXPECT_EQ(f.eval(F.elem(2)), (F.elem(2) + F.one()) / F.elem(4));
}

TEST(RationalFn, EMatchesFrameValues) {
  const SplitFrame f = build_frame(3, FieldContext::make(1).one(), 0);
  for (const auto& c : f.fq->elements()) {
    if (c.is_zero()) continue;
    for (const auto& j : fq_one_set(3, *f.fq)) EXPECT_EQ(e_rational(3, c, j).eval(f.y), e_root(f, c, j));
  }
}

TEST(RootProduct, ReproducesCPlusA) {
  for (const auto& [n, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
    const auto& base = FieldContext::make(k);
    for (std::uint64_t av = 1; av <= base.mask(); ++av) {
      const SplitFrame f = build_frame(n, base.elem(av), 0);
      const auto r = verify_root_product(f);
      EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
    }
  }
  const SplitFrame f = build_frame(2, FieldContext::make(1).one(), 0);
  EXPECT_FALSE(verify_root_product(f, Perturb::rhs).pass);
}
