#include "mcm/dickson.hpp"

#include <random>

namespace mcm {
namespace {

void require_n(unsigned n, unsigned lo, const char* what) {
  if (n < lo || n > 16) {
    throw std::invalid_argument(std::string(what) + ": n must be in [" + std::to_string(lo) + ", 16]");
  }
}

// GF(2)[x] packed 64 coefficients per word; only used by the relation checks, where
// degrees reach 4q and the pair count is quadratic.
struct BitPoly {
  std::vector<std::uint64_t> w;

  static BitPoly from(const UPoly& f) {
    BitPoly p;
    const auto r = f.raw();
    p.w.assign(r.size() / 64 + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i]) p.w[i / 64] |= 1ULL << (i % 64);
    }
    p.trim();
    return p;
  }
  void trim() {
    while (!w.empty() && w.back() == 0) w.pop_back();
  }
  friend BitPoly operator+(BitPoly a, const BitPoly& b) {
    if (b.w.size() > a.w.size()) a.w.resize(b.w.size(), 0);
    for (std::size_t i = 0; i < b.w.size(); ++i) a.w[i] ^= b.w[i];
    a.trim();
    return a;
  }
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b) {
    BitPoly r;
    if (a.w.empty() || b.w.empty()) return r;
    r.w.assign(a.w.size() + b.w.size(), 0);
    for (std::size_t i = 0; i < a.w.size(); ++i) {
      for (std::size_t j = 0; j < b.w.size(); ++j) {
        const u128 p = FieldContext::clmul(a.w[i], b.w[j]);
        r.w[i + j] ^= static_cast<std::uint64_t>(p);
        r.w[i + j + 1] ^= static_cast<std::uint64_t>(p >> 64);
      }
    }
    r.trim();
    return r;
  }
  friend bool operator==(const BitPoly&, const BitPoly&) = default;
};

std::vector<UPoly> dickson_table(unsigned kmax) {
  const auto& f2 = FieldContext::make(1);
  std::vector<UPoly> d;
  d.reserve(kmax + 1);
  d.emplace_back(f2);
  if (kmax >= 1) d.push_back(UPoly::x(f2));
  for (unsigned k = 2; k <= kmax; ++k) d.push_back(d[k - 1].shift(1) + d[k - 2]);
  return d;
}

}  // namespace

UPoly dickson_poly(unsigned k, const FieldContext& ctx) {
  const auto& f2 = FieldContext::make(1);
  UPoly prev(f2), cur = UPoly::x(f2);
  if (k == 0) return prev.lift(ctx);
  for (unsigned i = 2; i <= k; ++i) {
    UPoly next = cur.shift(1) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.lift(ctx);
}

UPoly dickson_qm1_closed(unsigned n, const FieldContext& ctx) {
  require_n(n, 1, "dickson_qm1_closed");
  const std::size_t q = std::size_t{1} << n;
  UPoly acc(ctx);
  for (unsigned i = 1; i <= n; ++i) acc += UPoly::monomial(ctx.one(), q - (std::size_t{1} << i) + 1);
  return acc;
}

UPoly dickson_qp1_closed(unsigned n, const FieldContext& ctx) {
  const std::size_t q = std::size_t{1} << n;
  return UPoly::monomial(ctx.one(), q + 1) + dickson_qm1_closed(n, ctx);
}

UPoly t_poly(unsigned n, const FieldContext& ctx) {
  require_n(n, 2, "t_poly");
  UPoly acc(ctx);
  for (unsigned i = 0; i < n; ++i) acc += UPoly::monomial(ctx.one(), (std::size_t{1} << i) - 1);
  return acc;
}

UPoly t_rev_poly(unsigned n, const FieldContext& ctx) {
  require_n(n, 2, "t_rev_poly");
  const std::size_t half = std::size_t{1} << (n - 1);
  UPoly acc(ctx);
  for (unsigned i = 0; i < n; ++i) acc += UPoly::monomial(ctx.one(), half - (std::size_t{1} << i));
  return acc;
}

UPoly c_poly(unsigned n, const FieldContext& ctx) {
  const auto& f2 = FieldContext::make(1);
  const std::uint64_t q = 1ULL << n;
  return t_poly(n, f2).pow(q + 1).shift(1).lift(ctx);
}

FieldElem c_eval(unsigned n, const FieldElem& x) {
  require_n(n, 2, "c_eval");
  if (x.is_zero()) return x;
  FieldElem s = x.field().zero(), p = x;
  for (unsigned i = 0; i < n; ++i) {
    s += p;
    p = p.square();
  }
  const FieldElem t = s / x;
  return x * t.frobenius(n) * t;
}

CheckReport verify_closed_forms(unsigned n, Perturb perturb) {
  CheckReport rep("closed-forms");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  require_n(n, 1, "verify_closed_forms");
  const auto& f2 = FieldContext::make(1);
  const std::size_t q = std::size_t{1} << n;
  const auto table = dickson_table(static_cast<unsigned>(q + 1));
  UPoly qm1 = dickson_qm1_closed(n, f2);
  UPoly qp1 = dickson_qp1_closed(n, f2);
  if (perturb == Perturb::rhs) {
    qm1 += UPoly::monomial(f2.one(), q - 1);
    qp1 += UPoly::monomial(f2.one(), q - 1);
  }
  if (table[q - 1] != qm1) rep.fail("D_" + std::to_string(q - 1) + ": recurrence " + to_text(table[q - 1]) + " != closed " + to_text(qm1));
  if (table[q + 1] != qp1) rep.fail("D_" + std::to_string(q + 1) + ": recurrence " + to_text(table[q + 1]) + " != closed " + to_text(qp1));
  return rep;
}

CheckReport verify_dickson_relations(unsigned n, unsigned trials, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("dickson-relations");
  rep.param("n", std::to_string(n)).param("trials", std::to_string(trials)).param("seed", std::to_string(seed));
  ReportTimer timer(rep);
  require_n(n, 1, "verify_dickson_relations");
  const unsigned kmax = 2u << n;  // 2q
  const auto table = dickson_table(2 * kmax);
  std::vector<BitPoly> d;
  d.reserve(table.size());
  for (const auto& p : table) d.push_back(BitPoly::from(p));

  std::size_t checked = 0;
  for (unsigned k = 0; k <= kmax && rep.pass; ++k) {
    for (unsigned l = 0; l <= k; ++l) {
      ++checked;
      if (d[k] * d[l] != d[k + l] + d[k - l]) {
        rep.fail("product rule fails at k=" + std::to_string(k) + ", l=" + std::to_string(l));
        break;
      }
    }
  }
  const BitPoly x = BitPoly::from(UPoly::x(FieldContext::make(1)));
  for (unsigned k = 0; k <= kmax && rep.pass; ++k) {
    BitPoly rhs = d[k] * d[k];
    if (perturb == Perturb::rhs) rhs = rhs + x;
    ++checked;
    if (d[2 * k] != rhs) rep.fail("Frobenius rule D_" + std::to_string(2 * k) + " = D_" + std::to_string(k) + "^2 fails");
  }

  const auto& big = FieldContext::make(2 * n);
  std::mt19937_64 rng(seed);
  std::vector<UPoly> lifted;
  lifted.reserve(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) lifted.push_back(table[k].lift(big));
  for (unsigned t = 0; t < trials && rep.pass; ++t) {
    FieldElem u = big.zero();
    while (u.is_zero()) u = big.elem(rng() & big.mask());
    const FieldElem au = ang(u);
    for (unsigned k = 0; k <= kmax; ++k) {
      ++checked;
      FieldElem expect = k == 0 ? big.zero() : ang(u.pow(k));
      if (perturb == Perturb::rhs) expect += big.one();
      if (lifted[k](au) != expect) {
        rep.fail("D_" + std::to_string(k) + "(<u>) != <u^k> at u=" + to_hex(u));
        break;
      }
    }
  }
  rep.detail("identities_checked", std::to_string(checked));
  return rep;
}

}  // namespace mcm
