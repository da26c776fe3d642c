#include <algorithm>

#include "mcm/parallel.hpp"
#include "mcm/splitting.hpp"

namespace mcm {
namespace {

FieldElem lift_to(const FieldElem& x, const FieldContext& F) {
  if (x.context() == &F) return x;
  return Embedding::get(x.field(), F)(x);
}

// lambda <v>^(q-1)
FieldElem lam_ang(const FieldElem& lambda, const FieldElem& v, std::uint64_t q) { return lambda * ang(v).pow(q - 1); }

}  // namespace

SevenWitness seven_witness(const SplitFrame& f, const FieldElem& e, std::uint64_t seed) {
  if (e.context() != f.ambient) throw ContextMismatch("seven_witness: e must lie in the frame's ambient field");
  if (c_eval(f.n, e) != f.a_up) throw std::invalid_argument("seven_witness: e is not a root of C(x)+a");
  const std::uint64_t q = f.q();
  const auto& A = *f.ambient;

  // U^(2(q+1)) + (1/e) U^(q+1) + 1
  std::vector<std::uint64_t> pc(2 * (q + 1) + 1, 0);
  pc[0] = 1;
  pc[q + 1] = e.inv().bits();
  pc.back() = 1;
  const UPoly P(A, std::move(pc));
  auto us = roots_in_field(P, seed);
  const FieldContext* F = &A;
  if (us.empty()) {
    const unsigned s = splitting_degree(P, seed);
    const unsigned deg = A.degree() * s;
    if (deg > 64) throw std::invalid_argument("seven_witness: u needs GF(2^" + std::to_string(deg) + ")");
    F = &FieldContext::make(deg);
    us = roots_in_field(P.lift(*F), seed);
  }
  if (us.empty()) throw InternalError("U^(2(q+1)) + U^(q+1)/e + 1 has no root in its splitting field");

  SevenWitness w;
  w.field = F;
  w.e = lift_to(e, *F);
  w.r = lift_to(f.r, *F);
  w.r0 = lift_to(f.r0, *F);
  w.r1 = lift_to(f.r1, *F);
  w.y = lift_to(f.y, *F);
  const FieldElem te = t_poly(f.n, *F)(w.e);
  w.lambda = w.e * te.square();

  const auto mu = mu_subgroup(f.n, *F);
  const FieldElem u0 = us.front();
  const FieldElem r2 = w.r.square(), r02 = w.r0.square(), r12 = w.r1.square();
  auto find_mu = [&](const FieldElem& target, const FieldElem& base) -> std::optional<FieldElem> {
    for (const auto& v : mu) {
      if (lam_ang(w.lambda, v * base, q) == target) return v;
    }
    return std::nullopt;
  };
  const auto nu = find_mu(r2, u0);
  if (!nu) throw InternalError("no rescaling of u matches r^2");
  w.nu = *nu;
  w.u = *nu * u0;
  const auto z2 = find_mu(r02, w.u);
  const auto p2 = find_mu(r12, w.u);
  if (!z2 || !p2) throw InternalError("no element of mu_{q+1} aligns with r0^2 or r1^2");
  w.zeta = sqrt(*z2);
  w.rho = sqrt(*p2);
  if (w.zeta.is_one() || w.rho.is_one() || w.zeta == w.rho) throw InternalError("zeta, rho not distinct from each other and 1");

  const FieldElem c_up = ang(w.zeta / w.rho) / (ang(w.zeta) * ang(w.rho));
  const FieldElem d_up = ang(w.zeta).inv();
  const auto& emb = Embedding::get(*f.fq, *F);
  const auto c = emb.preimage(c_up), d = emb.preimage(d_up);
  if (!c || !d) throw InternalError("c or d outside GF(q)");
  w.c = *c;
  w.d = *d;
  return w;
}

CheckReport verify_seven_formulas(const SplitFrame& f, const SevenWitness& w, Perturb perturb) {
  CheckReport rep("seven-formulas");
  rep.param("n", std::to_string(f.n)).param("k", std::to_string(f.k)).param("a", to_hex(f.a)).param("e", to_hex(w.e));
  ReportTimer timer(rep);
  const auto& F = *w.field;
  const std::uint64_t q = f.q();
  const unsigned n = f.n;
  const FieldElem one = F.one();
  const auto& emb = Embedding::get(*f.fq, F);
  const FieldElem c = emb(w.c), d = emb(w.d);
  const FieldElem &u = w.u, &zeta = w.zeta, &rho = w.rho, &y = w.y;
  auto need = [&](bool ok, const char* what) {
    if (!ok) rep.fail(std::string(what) + " fails for e=" + to_hex(w.e) + " (u=" + to_hex(u) + ")");
  };

  need(ang(u.pow(q + 1)) == w.e.inv(), "1/e = <u^(q+1)>");
  need(w.r.square() == lam_ang(w.lambda, u, q), "r^2 = lambda <u>^(q-1)");
  need(w.r0.square() == lam_ang(w.lambda, zeta.square() * u, q), "r0^2 = lambda <zeta^2 u>^(q-1)");
  need(w.r1.square() == lam_ang(w.lambda, rho.square() * u, q), "r1^2 = lambda <rho^2 u>^(q-1)");

  const FieldElem zr = zeta / rho;
  need(y.square() == ang(rho.square()) * ang(zeta.square() * u) / (ang(zr.square()) * ang(u)), "y^2 in terms of zeta, rho, u");
  need(y == ang(rho) * (zeta * u + zeta.inv()) / (ang(zr) * (u + one)), "y in terms of zeta, rho, u");
  need(u == (ang(zr) * y + ang(rho) / zeta) / (ang(zr) * y + ang(rho) * zeta), "u as a fractional linear function of y");
  const FieldElem quad = (c * y).square() + c * y + d.square();
  need(ang(u) == quad.inv(), "<u> = 1/((cy)^2 + cy + d^2)");
  need(dickson_qp1_closed(n, F)(quad.inv()) == w.e.inv(), "D_{q+1}(1/((cy)^2 + cy + d^2)) = 1/e");
  need((y.frobenius(n) + y).square() == ang(u.pow(q + 1)) / (c.square() * ang(u).pow(q + 1)), "(y^q + y)^2 in terms of u and c");
  FieldElem e_expected = (c * y.square() + y + d.square() / c).pow(q + 1) / (y.frobenius(n) + y).square();
  if (perturb == Perturb::rhs) e_expected += one;
  need(w.e == e_expected, "e in terms of c and d");

  need(trace_abs(w.d) == 1, "d in F_{q,1}");
  need(lift_to(e_root(f, w.c, w.d.square()), F) == w.e, "e = e(y, c, d^2)");
  rep.detail("c", to_hex(w.c)).detail("d", to_hex(w.d)).detail("witness_field", F.describe());
  return rep;
}

CheckReport verify_eRelation(const SplitFrame& f, const SevenWitness& w) {
  CheckReport rep("eRelation");
  rep.param("n", std::to_string(f.n)).param("a", to_hex(f.a)).param("e", to_hex(w.e));
  ReportTimer timer(rep);
  const auto& F = *w.field;
  const std::uint64_t q = f.q();
  std::vector<FieldElem> lhs, rhs;
  for (const auto& z : mu_subgroup(f.n, F)) lhs.push_back(lam_ang(w.lambda, z * w.u, q));
  for (const auto& r : f.by_point) rhs.push_back(lift_to(r, F).square());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (std::adjacent_find(lhs.begin(), lhs.end()) != lhs.end()) rep.fail("lambda <zeta u>^(q-1) repeats a value");
  const UPoly g = qp1_poly(f.n, f.a.square(), f.a.square()).lift(F);
  for (const auto& x : lhs) {
    if (!g(x).is_zero()) rep.fail("candidate " + to_hex(x) + " is not a root of x^(q+1)+a^2x+a^2");
  }
  if (lhs != rhs) rep.fail("candidate set differs from {r_w^2}");
  return rep;
}

CheckReport verify_seven(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("seven-formulas");
  rep.param("n", std::to_string(n)).param("k", std::to_string(a.field().degree())).param("a", to_hex(a));
  ReportTimer timer(rep);
  const SplitFrame f = build_frame(n, a, seed);
  const UPoly ca = c_poly(n, *f.ambient) + UPoly::constant(f.a_up);
  const auto es = roots_in_field(ca, seed);
  const std::uint64_t q = f.q();
  if (es.size() != (q / 2) * (q - 1)) rep.fail("C(x)+a has " + std::to_string(es.size()) + " roots in the frame");
  std::vector<CheckReport> parts(es.size());
  parallel_for(es.size(), [&](std::size_t i) {
    const SevenWitness w = seven_witness(f, es[i], seed);
    parts[i] = verify_seven_formulas(f, w, perturb);
    parts[i].absorb(verify_eRelation(f, w));
  });
  std::size_t ok = 0;
  for (const auto& p : parts) {
    if (p.pass) ++ok;
    else rep.fail(*p.counterexample);
  }
  rep.detail("roots_checked", std::to_string(ok) + "/" + std::to_string(es.size()));
  return rep;
}

}  // namespace mcm
