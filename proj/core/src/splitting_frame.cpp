#include <algorithm>
#include <sstream>

#include "mcm/splitting.hpp"

namespace mcm {

UPoly qp1_poly(unsigned n, const FieldElem& b, const FieldElem& c) {
  const auto& F = b.field();
  std::vector<std::uint64_t> v((std::size_t{1} << n) + 2, 0);
  v[0] = c.bits();
  v[1] = b.bits();
  v.back() = 1;
  return UPoly(F, std::move(v));
}

const FieldElem& SplitFrame::root_at(const ProjPoint& w) const {
  if (w.is_infinity()) return by_point[0];
  if (w.value().context() != fq) throw ContextMismatch("root index outside GF(q)");
  return by_point[1 + w.value().bits()];
}

FieldElem SplitFrame::up(const FieldElem& x) const {
  if (x.context() == ambient) return x;
  return Embedding::get(x.field(), *ambient)(x);
}

SplitFrame build_frame(unsigned n, const FieldElem& a, std::uint64_t seed) {
  if (n < 2 || n > 16) throw std::invalid_argument("build_frame: n must be in [2, 16]");
  if (!a.valid() || a.is_zero()) throw std::invalid_argument("build_frame: a must be nonzero");
  SplitFrame f;
  f.n = n;
  f.base = &a.field();
  f.k = f.base->degree();
  f.fq = &FieldContext::make(n);
  f.a = a;
  const std::uint64_t q = f.q();

  const UPoly poly = qp1_poly(n, a, a);
  const unsigned s = splitting_degree(poly, seed);
  const std::uint64_t deg = lcm_u64(std::uint64_t{f.k} * s, 2 * n);
  if (deg > 64) {
    throw std::invalid_argument("frame for n=" + std::to_string(n) + ", k=" + std::to_string(f.k) +
                                " needs GF(2^" + std::to_string(deg) + "), beyond 64 bits");
  }
  f.ambient = &FieldContext::make(static_cast<unsigned>(deg));
  f.a_up = f.up(a);
  f.roots = roots_in_field(poly.lift(*f.ambient), seed);
  if (f.roots.size() != q + 1) throw InternalError("x^(q+1)+ax+a does not split into distinct roots in the ambient field");

  f.r = f.roots[0];
  f.r0 = f.roots[1];
  f.r1 = f.roots[2];
  f.y = (f.r1 + f.r) / (f.r1 + f.r0);
  f.z = f.y.pow(q - 1);
  f.xi = f.y.frobenius(n) + f.y;
  const FieldElem one = f.ambient->one();
  if (f.xi.is_zero()) throw InternalError("xi = 0");
  if (f.r0 != f.r * f.z) throw InternalError("r0 != r z");
  const FieldElem inv_r1 = (f.r + one).inv();
  if (f.xi.pow(q - 1) != inv_r1) throw InternalError("xi^(q-1) != 1/(r+1)");
  if (f.z * (f.z + one).pow(q - 1) != inv_r1) throw InternalError("z (z+1)^(q-1) != 1/(r+1)");
  if (f.xi != f.y * (f.z + one)) throw InternalError("xi != y (z+1)");
  if (f.y.frobenius(2 * n) == f.y) throw InternalError("y lies in GF(q^2)");

  f.points = projective_line(*f.fq);
  const auto& emb = f.fq_embedding();
  f.by_point.reserve(f.points.size());
  f.by_point.push_back(f.r);
  for (std::size_t i = 1; i < f.points.size(); ++i) f.by_point.push_back(f.r * (f.y + emb(f.points[i].value())).pow(q - 1));
  std::vector<FieldElem> sorted = f.by_point;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != f.roots) throw InternalError("r (y + w)^(q-1) does not reproduce the root set");
  return f;
}

FieldElem e_at(const SplitFrame& f, const FieldElem& yv, const FieldElem& c, const FieldElem& j) {
  const FieldElem cu = f.up(c), ju = f.up(j);
  const FieldElem den = (yv.frobenius(f.n) + yv).square();
  if (den.is_zero()) throw std::domain_error("e(y,c,j) undefined: y lies in GF(q)");
  return (cu * yv.square() + yv + ju / cu).pow(f.q() + 1) / den;
}

FieldElem e_root(const SplitFrame& f, const FieldElem& c, const FieldElem& j) {
  if (c.context() != f.fq || j.context() != f.fq) throw ContextMismatch("c and j must lie in GF(q)");
  if (c.is_zero()) throw std::invalid_argument("e_root: c must be nonzero");
  if (trace_abs(j) != 1) throw std::invalid_argument("e_root: j must have trace 1");
  return e_at(f, f.y, c, j);
}

std::vector<RootEntry> root_table(const SplitFrame& f) {
  std::vector<RootEntry> out;
  const auto ones = fq_one_set(f.n, *f.fq);
  for (const auto& c : f.fq->elements()) {
    if (c.is_zero()) continue;
    for (const auto& j : ones) out.push_back({c, j, e_root(f, c, j)});
  }
  return out;
}

CheckReport verify_frame(const SplitFrame& f, Perturb perturb) {
  CheckReport rep("frame");
  rep.param("n", std::to_string(f.n)).param("k", std::to_string(f.k)).param("a", to_hex(f.a));
  ReportTimer timer(rep);
  const std::uint64_t q = f.q();
  const FieldElem one = f.ambient->one();

  // a = (1 + xi^(1-q))^(q+1) xi^(q-1)
  const FieldElem xq1 = f.xi.pow(q - 1);
  FieldElem a_rec = (one + xq1.inv()).pow(q + 1) * xq1;
  if (perturb == Perturb::rhs) a_rec += one;
  if (a_rec != f.a_up) rep.fail("a-recovery gives " + to_hex(a_rec) + " instead of " + to_hex(f.a_up));

  // w = (r1 - r)/(r1 - r0) - (r_{w+1} - r)/(r_{w+1} - r_w)
  const auto& emb = f.fq_embedding();
  const FieldElem head = (f.r1 + f.r) / (f.r1 + f.r0);
  for (const auto& w : f.fq->elements()) {
    const FieldElem rw1 = f.root_at(ProjPoint::finite(w + f.fq->one()));
    const FieldElem rw = f.root_at(ProjPoint::finite(w));
    if (head + (rw1 + f.r) / (rw1 + rw) != emb(w)) rep.fail("b-recovery fails at w=" + to_hex(w));
  }

  // (c, j) -> e(y, c, j) is a bijection onto the roots of C(x) + a.
  const auto table = root_table(f);
  std::vector<FieldElem> es;
  for (const auto& t : table) {
    if (c_eval(f.n, t.e) != f.a_up) rep.fail("C(e(y,c,j)) != a at c=" + to_hex(t.c) + " j=" + to_hex(t.j));
    es.push_back(t.e);
  }
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) rep.fail("two pairs (c,j) give the same root");
  if (es.size() != (q / 2) * (q - 1)) rep.fail("root table has " + std::to_string(es.size()) + " entries");
  rep.detail("ambient", f.ambient->describe());
  return rep;
}

std::string dump_frame(const SplitFrame& f) {
  std::ostringstream os;
  os << "n " << f.n << "  k " << f.k << "  a " << to_hex(f.a) << "\n";
  os << "ambient " << f.ambient->describe() << "\n";
  os << "y  " << to_hex(f.y) << "\nz  " << to_hex(f.z) << "\nxi " << to_hex(f.xi) << "\n";
  os << "roots r_w\n";
  for (std::size_t i = 0; i < f.points.size(); ++i) os << "  " << f.points[i].str() << "  " << to_hex(f.by_point[i]) << "\n";
  os << "roots e(y,c,j) of C(x)+a\n";
  for (const auto& t : root_table(f)) os << "  c " << to_hex(t.c) << "  j " << to_hex(t.j) << "  " << to_hex(t.e) << "\n";
  return os.str();
}

}  // namespace mcm
