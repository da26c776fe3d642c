#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "mcm/dickson.hpp"
#include "mcm/pgl2_scan.hpp"
#include "mcm/splitting.hpp"
#include "oracle.hpp"

using namespace mcm;

namespace {

std::uint64_t clmul_mask(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (; b; b >>= 1, a <<= 1) {
    if (b & 1) r ^= a;
  }
  return r;
}

// C(x) over GF(2) as a bit mask, from T directly.
std::uint64_t c_mask(unsigned n) {
  std::uint64_t t = 0;
  for (unsigned i = 0; i < n; ++i) t |= std::uint64_t{1} << ((1u << i) - 1);
  std::uint64_t p = 2;  // x
  for (unsigned i = 0; i < (1u << n) + 1; ++i) p = clmul_mask(p, t);
  return p;
}

unsigned lcm_of(const std::vector<unsigned>& parts) {
  unsigned l = 1;
  for (auto p : parts) l = std::lcm(l, p);
  return l;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

RootCounts closed_form_counts(unsigned n, unsigned m) {
  const std::uint64_t q = 1ULL << n;
  RootCounts rc;
  rc.c0 = (q - 2) * (ipow(q, m) - 1) / (2 * (q - 1));
  if (m % 2 == 0) {
    rc.c1 = (ipow(q, m + 1) - q) / (2 * (q + 1));
    rc.chalf = ipow(q, m - 1);
    rc.ctop = (ipow(q, m - 1) - q) / (q * q - 1);
  } else {
    rc.c1 = (ipow(q, m + 1) + q) / (2 * (q + 1));
    rc.chalf = ipow(q, m - 1) - 1;
    rc.ctop = (ipow(q, m - 1) - 1) / (q * q - 1);
  }
  return rc;
}

}  // namespace

TEST(Frame, RootsAndRelations) {
  for (const auto& [n, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}}) {
    const auto& base = FieldContext::make(k);
    for (std::uint64_t av = 1; av <= base.mask(); ++av) {
      const SplitFrame f = build_frame(n, base.elem(av), 0);
      const std::uint64_t q = f.q();
      ASSERT_EQ(f.roots.size(), q + 1);
      EXPECT_TRUE(std::is_sorted(f.roots.begin(), f.roots.end()));
      for (const auto& r : f.roots) EXPECT_TRUE((r.pow(q + 1) + f.a_up * r + f.a_up).is_zero());
      EXPECT_EQ(f.r, f.roots[0]);
      EXPECT_EQ(f.y, (f.r1 + f.r) / (f.r1 + f.r0));
      EXPECT_EQ(f.z, f.y.pow(q - 1));
      EXPECT_EQ(f.root_at(ProjPoint::infinity()), f.r);
      std::vector<FieldElem> sorted = f.by_point;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(sorted, f.roots);
      EXPECT_EQ(f.ambient->degree() % (2 * n), 0u);
      EXPECT_EQ(f.ambient->degree() % k, 0u);
      const auto r = verify_frame(f);
      EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
    }
  }
}

TEST(Frame, RejectsBadInput) {
  EXPECT_THROW(build_frame(2, FieldContext::make(1).zero(), 0), std::invalid_argument);
  EXPECT_THROW(build_frame(1, FieldContext::make(1).one(), 0), std::invalid_argument);
}

TEST(Frame, SeedDoesNotChangeTheFrame) {
  const auto& base = FieldContext::make(2);
  const SplitFrame a = build_frame(3, base.elem(2), 1), b = build_frame(3, base.elem(2), 12345);
  EXPECT_EQ(a.roots, b.roots);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(dump_frame(a), dump_frame(b));
}

TEST(Frame, RootTableIsABijectionOntoRootsOfC) {
  for (unsigned n = 2; n <= 3; ++n) {
    const SplitFrame f = build_frame(n, FieldContext::make(1).one(), 0);
    const auto table = root_table(f);
    const std::size_t q = f.q();
    ASSERT_EQ(table.size(), q / 2 * (q - 1));
    std::set<std::uint64_t> seen;
    for (const auto& row : table) {
      EXPECT_EQ(trace_abs(row.j), 1);
      EXPECT_EQ(c_eval(n, row.e), f.a_up);
      EXPECT_EQ(oracle::c_value(n, row.e.bits(), f.ambient->degree(), f.ambient->modulus()), f.a_up.bits());
      seen.insert(row.e.bits());
    }
    EXPECT_EQ(seen.size(), table.size());
  }
}

TEST(Seven, WitnessForEveryRoot) {
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = verify_seven(n, FieldContext::make(1).one(), 0);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
  const SplitFrame f = build_frame(2, FieldContext::make(2).elem(2), 0);
  for (const auto& row : root_table(f)) {
    const SevenWitness w = seven_witness(f, row.e, 0);
    EXPECT_EQ(trace_abs(w.d), 1);
    EXPECT_TRUE(w.zeta.pow(f.q() + 1).is_one());
    EXPECT_TRUE(w.rho.pow(f.q() + 1).is_one());
    EXPECT_TRUE(verify_seven_formulas(f, w).pass);
    EXPECT_TRUE(verify_eRelation(f, w).pass);
  }
  EXPECT_FALSE(verify_seven(2, FieldContext::make(1).one(), 0, Perturb::rhs).pass);
}

TEST(SplitField, DegreesAgreeWithTrialDivision) {
  // Over GF(2) with a = 1 all four polynomials are binary; compare against trial division.
  for (unsigned n = 2; n <= 3; ++n) {
    const std::uint64_t q = 1ULL << n;
    const std::uint64_t f = (std::uint64_t{1} << (q + 1)) | 3;
    const unsigned want = lcm_of(oracle::factor_degrees2(f));
    EXPECT_EQ(want, lcm_of(oracle::factor_degrees2(c_mask(n) ^ 1))) << n;
    const auto r = splitfield_equal(n, FieldContext::make(1).one(), 0);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
  EXPECT_EQ(oracle::factor_degrees2(c_mask(2) ^ 1), (std::vector<unsigned>{6}));
}

TEST(SplitField, ExhaustiveInA) {
  for (const auto& [n, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}}) {
    const auto r = verify_splitfield(n, k, 0);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
  EXPECT_FALSE(verify_splitfield(2, 2, 0, Perturb::rhs).pass);
}

TEST(Correspond, FourCases) {
  for (const auto& [n, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 4}, {3, 3}}) {
    const auto r = verify_correspond_all(n, k, 0);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
    const auto& base = FieldContext::make(k);
    for (std::uint64_t av = 1; av <= base.mask(); ++av) {
      const Correspondence c = correspond(n, base.elem(av), 0);
      ASSERT_TRUE(c.case_id.has_value());
      EXPECT_EQ(c.f.total(), (1u << n) + 1);
      EXPECT_EQ(c.c.total(), (1u << (n - 1)) * ((1u << n) - 1));
    }
  }
  EXPECT_FALSE(correspond(3, FieldContext::make(1).one(), 0).case_id.has_value());
  EXPECT_FALSE(verify_correspond_all(2, 2, 0, Perturb::rhs).pass);
}

TEST(Correspond, QuinticOverGF2MatchesTrialDivision) {
  const Correspondence c = correspond(2, FieldContext::make(1).one(), 0);
  EXPECT_EQ(c.f.parts, oracle::factor_degrees2(0x23));
  EXPECT_EQ(c.c.parts, oracle::factor_degrees2(c_mask(2) ^ 1));
  EXPECT_EQ(c.f.str(), "[2,3]");
  EXPECT_EQ(c.c.str(), "[6]");
}

TEST(Quintic, TableForSmallK) {
  for (unsigned k = 1; k <= 4; ++k) {
    const auto r = quintic_table(k, 0);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
  EXPECT_FALSE(quintic_table(2, 0, Perturb::rhs).pass);
}

TEST(RootCounts, BruteForceAndClosedForms) {
  for (const auto& [n, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}}) {
    const unsigned deg = n * m;
    const auto& F = FieldContext::make(deg);
    const std::uint64_t q = 1ULL << n;
    std::vector<std::uint64_t> hits(F.mask() + 1, 0);
    for (std::uint64_t x = 0; x <= F.mask(); ++x) ++hits[oracle::c_value(n, x, deg, F.modulus())];
    RootCounts brute;
    for (std::uint64_t a = 1; a <= F.mask(); ++a) {
      const auto h = hits[a];
      if (h == 0) ++brute.c0;
      else if (h == 1) ++brute.c1;
      else if (h == q / 2) ++brute.chalf;
      else if (h == q / 2 * (q - 1)) ++brute.ctop;
      else ++brute.other[h];
    }
    EXPECT_EQ(root_count_distribution(n, m), brute) << n << "," << m;
    EXPECT_EQ(brute, closed_form_counts(n, m)) << n << "," << m;
    EXPECT_EQ(expected_root_counts(n, m), closed_form_counts(n, m));
  }
  EXPECT_EQ(root_count_distribution(2, 2).str(), "(5,6,4,0)");
  EXPECT_EQ(root_count_distribution(3, 1).str(), "(3,4,0,0)");
  EXPECT_FALSE(verify_root_counts(2, 2, Perturb::rhs).pass);
}

TEST(PermCheck, MatchesExhaustiveImageAndGcdRule) {
  for (unsigned n : {2u, 3u, 5u}) {
    for (unsigned m = 1; m <= 10; ++m) {
      const auto& F = FieldContext::make(m);
      std::vector<bool> hit(F.mask() + 1, false);
      bool perm = true;
      for (std::uint64_t x = 0; x <= F.mask(); ++x) {
        const auto v = oracle::c_value(n, x, m, F.modulus());
        if (hit[v]) perm = false;
        hit[v] = true;
      }
      const PermResult r = perm_check(n, m);
      EXPECT_EQ(r.is_permutation, perm) << n << "," << m;
      EXPECT_EQ(r.predicted, std::gcd(2 * m, n) == 1);
      EXPECT_EQ(r.is_permutation, r.predicted);
    }
  }
  for (unsigned m = 1; m <= 10; ++m) EXPECT_EQ(perm_check(3, m).is_permutation, m % 3 != 0);
  EXPECT_FALSE(verify_perm(3, 3, Perturb::rhs).pass);
}

TEST(Orbits, FrobeniusShapes) {
  for (unsigned n = 2; n <= 3; ++n) {
    const auto r = verify_orbit_structure(n, n, 0);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
  }
  EXPECT_TRUE(verify_orbit_structure(2, 4, 0).pass);
  EXPECT_FALSE(verify_orbit_structure(2, 2, 0, Perturb::rhs).pass);
}

TEST(Stabilizer, ScanEqualsDihedral) {
  for (unsigned n = 2; n <= 3; ++n) {
    const SplitFrame f = build_frame(n, FieldContext::make(1).one(), 0);
    const auto r = verify_stabilizer(f);
    EXPECT_TRUE(r.pass) << r.counterexample.value_or("");
    const auto& fq = *f.fq;
    const FieldElem c = fq.one(), j = fq_one_set(n, fq).front();
    const auto scan = stabilizer_scan(f, c, j);
    EXPECT_EQ(scan.size(), 2 * (f.q() + 1));
    EXPECT_EQ(scan, dihedral_group(sqrt(j), c / sqrt(j)));
  }
  const SplitFrame f = build_frame(2, FieldContext::make(1).one(), 0);
  EXPECT_TRUE(verify_gammay(f).pass);
  EXPECT_FALSE(verify_stabilizer(f, Perturb::rhs).pass);
}
