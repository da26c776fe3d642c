#include "mcm/pgl2.hpp"

#include <algorithm>

#include "mcm/parallel.hpp"

namespace mcm {
namespace {

const FieldContext& fq_for(unsigned n) {
  if (n < 2 || n > 16) throw std::invalid_argument("PGL2 checks need 2 <= n <= 16");
  return FieldContext::make(n);
}

std::string hex_pair(const char* a, const FieldElem& x, const char* b, const FieldElem& y) {
  return std::string(a) + "=" + to_hex(x) + " " + b + "=" + to_hex(y);
}

bool contains(const std::vector<PGL2Elem>& sorted, const PGL2Elem& g) {
  return std::binary_search(sorted.begin(), sorted.end(), g);
}

}  // namespace

const FieldElem& ProjPoint::value() const {
  if (inf_) throw std::logic_error("the point at infinity has no finite value");
  return w_;
}

std::string ProjPoint::str() const { return inf_ ? "inf" : to_hex(w_); }

std::vector<ProjPoint> projective_line(const FieldContext& fq) {
  std::vector<ProjPoint> out{ProjPoint::infinity()};
  for (const auto& w : fq.elements()) out.push_back(ProjPoint::finite(w));
  return out;
}

PGL2Elem::PGL2Elem(FieldElem A, FieldElem B, FieldElem C, FieldElem D)
    : a_(A), b_(B), c_(C), d_(D) {
  if ((a_ * d_ + b_ * c_).is_zero()) throw std::domain_error("singular matrix " + str());
  const FieldElem& lead = !a_.is_zero() ? a_ : !b_.is_zero() ? b_ : c_;
  if (!lead.is_one()) {
    const FieldElem s = lead.inv();
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
  }
}

PGL2Elem PGL2Elem::identity(const FieldContext& fq) { return PGL2Elem(fq.one(), fq.zero(), fq.zero(), fq.one()); }

bool PGL2Elem::is_identity() const noexcept { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one(); }

PGL2Elem PGL2Elem::inverse() const { return PGL2Elem(d_, b_, c_, a_); }

ProjPoint PGL2Elem::act(const ProjPoint& w) const {
  if (w.is_infinity()) return c_.is_zero() ? ProjPoint::infinity() : ProjPoint::finite(a_ / c_);
  const FieldElem num = a_ * w.value() + b_;
  const FieldElem den = c_ * w.value() + d_;
  return den.is_zero() ? ProjPoint::infinity() : ProjPoint::finite(num / den);
}

FieldElem PGL2Elem::act(const Embedding& emb, const FieldElem& y) const {
  const FieldElem den = emb(c_) * y + emb(d_);
  if (den.is_zero()) throw std::domain_error("linear fractional map has a pole at " + to_hex(y));
  return (emb(a_) * y + emb(b_)) / den;
}

std::string PGL2Elem::str() const {
  return "[[" + to_hex(a_) + "," + to_hex(b_) + "],[" + to_hex(c_) + "," + to_hex(d_) + "]]";
}

PGL2Elem operator*(const PGL2Elem& g, const PGL2Elem& h) {
  return PGL2Elem(g.a_ * h.a_ + g.b_ * h.c_, g.a_ * h.b_ + g.b_ * h.d_,
                  g.c_ * h.a_ + g.d_ * h.c_, g.c_ * h.b_ + g.d_ * h.d_);
}

std::vector<PGL2Elem> all_elements(const FieldContext& fq) {
  const auto els = fq.elements();
  const FieldElem zero = fq.zero(), one = fq.one();
  std::vector<PGL2Elem> out;
  out.reserve(els.size() * els.size() * els.size());
  for (const auto& C : els) {
    if (C.is_zero()) continue;
    for (const auto& D : els) out.emplace_back(zero, one, C, D);
  }
  for (const auto& B : els) {
    for (const auto& C : els) {
      for (const auto& D : els) {
        if (D != B * C) out.emplace_back(one, B, C, D);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned order(const PGL2Elem& g) {
  PGL2Elem p = g;
  unsigned e = 1;
  while (!p.is_identity()) {
    p = p * g;
    ++e;
  }
  return e;
}

std::string to_string(PGLClass c) {
  switch (c) {
    case PGLClass::identity: return "identity";
    case PGLClass::involution: return "involution";
    case PGLClass::splits_qm1: return "splits_qm1";
    case PGLClass::splits_qp1: return "splits_qp1";
  }
  return "?";
}

PGLClass classify(const PGL2Elem& g) {
  if (g.is_identity()) return PGLClass::identity;
  if (g.A() == g.D()) return PGLClass::involution;
  const FieldElem s = g.A() + g.D();
  return trace_abs(g.det() / s.square()) ? PGLClass::splits_qp1 : PGLClass::splits_qm1;
}

ClassCounts class_counts(unsigned n) {
  ClassCounts t;
  for (const auto& g : all_elements(fq_for(n))) {
    switch (classify(g)) {
      case PGLClass::identity: ++t.identity; break;
      case PGLClass::involution: ++t.involution; break;
      case PGLClass::splits_qm1: ++t.splits_qm1; break;
      case PGLClass::splits_qp1: ++t.splits_qp1; break;
    }
  }
  return t;
}

ClassCounts expected_class_counts(unsigned n) {
  const std::uint64_t q = 1ULL << n;
  return {1, q * q - 1, (q + 1) * (q / 2) * (q - 2), q * q * (q - 1) / 2};
}

CheckReport verify_class_counts(unsigned n, Perturb perturb) {
  CheckReport rep("class-counts");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  const auto& fq = fq_for(n);
  const std::uint64_t q = 1ULL << n;
  const auto els = all_elements(fq);
  ClassCounts got;
  for (const auto& g : els) {
    const PGLClass cls = classify(g);
    const unsigned o = order(g);
    bool agrees = false;
    switch (cls) {
      case PGLClass::identity: ++got.identity; agrees = o == 1; break;
      case PGLClass::involution: ++got.involution; agrees = o == 2; break;
      case PGLClass::splits_qm1: ++got.splits_qm1; agrees = o > 1 && (q - 1) % o == 0; break;
      case PGLClass::splits_qp1: ++got.splits_qp1; agrees = o > 1 && (q + 1) % o == 0; break;
    }
    if (!agrees) rep.fail("classify says " + to_string(cls) + " but order is " + std::to_string(o) + " for " + g.str());
  }
  ClassCounts want = expected_class_counts(n);
  if (perturb == Perturb::rhs) ++want.involution;
  auto tally = [](const ClassCounts& c) {
    return "(" + std::to_string(c.involution) + "," + std::to_string(c.splits_qm1) + "," + std::to_string(c.splits_qp1) + ")";
  };
  rep.detail("counts", tally(got)).detail("total", std::to_string(got.total()));
  if (got.total() != q * q * q - q) rep.fail("enumerated " + std::to_string(got.total()) + " elements");
  if (got != want) rep.fail("counts " + tally(got) + " differ from " + tally(want));
  return rep;
}

PGL2Elem cyclic_ma(const FieldElem& j, const FieldElem& C, const ProjPoint& A) {
  if (j.is_zero()) throw std::invalid_argument("cyclic_ma: j must be nonzero");
  if (C.is_zero()) throw std::invalid_argument("cyclic_ma: C must be nonzero");
  if (A.is_infinity()) return PGL2Elem::identity(j.field());
  const FieldElem& a = A.value();
  return PGL2Elem(a, C.inv(), C, a + j.inv());
}

std::vector<PGL2Elem> cyclic_group(const FieldElem& j, const FieldElem& C) {
  std::vector<PGL2Elem> out;
  for (const auto& A : projective_line(j.field())) out.push_back(cyclic_ma(j, C, A));
  return out;
}

std::vector<PGL2Elem> dihedral_group(const FieldElem& j, const FieldElem& C) {
  const auto& fq = j.field();
  const PGL2Elem t(fq.one(), (j * C).inv(), fq.zero(), fq.one());
  std::vector<PGL2Elem> out = cyclic_group(j, C);
  const std::size_t half = out.size();
  for (std::size_t i = 0; i < half; ++i) out.push_back(out[i] * t);
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport verify_dihedral(const FieldElem& j, const FieldElem& C, Perturb perturb) {
  CheckReport rep("dihedral");
  const auto& fq = j.field();
  rep.param("n", std::to_string(fq.degree())).param("j", to_hex(j)).param("C", to_hex(C));
  ReportTimer timer(rep);
  if (trace_abs(j) != 1) throw std::invalid_argument("verify_dihedral: j must have trace 1");
  const std::uint64_t q = 1ULL << fq.degree();
  const auto line = projective_line(fq);
  const auto cyc = cyclic_group(j, C);
  const FieldElem jinv = j.inv();

  for (std::size_t ia = 0; ia < line.size() && rep.pass; ++ia) {
    for (std::size_t ib = 0; ib < line.size(); ++ib) {
      const ProjPoint &A = line[ia], &B = line[ib];
      ProjPoint K = ProjPoint::infinity();
      if (A.is_infinity()) {
        K = B;
      } else if (B.is_infinity()) {
        K = A;
      } else {
        const FieldElem den = jinv + A.value() + B.value();
        FieldElem num = A.value() * B.value();
        if (perturb != Perturb::rhs) num += fq.one();
        if (!den.is_zero()) K = ProjPoint::finite(num / den);
      }
      if (cyc[ia] * cyc[ib] != cyclic_ma(j, C, K)) {
        rep.fail("M_A M_B != M_K at " + std::string("A=") + A.str() + " B=" + B.str());
        break;
      }
    }
  }

  std::vector<PGL2Elem> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) rep.fail("C_{j,C} has repeated elements");
  if (sorted.size() != q + 1) rep.fail("C_{j,C} has " + std::to_string(sorted.size()) + " elements");
  const auto gen = std::find_if(cyc.begin(), cyc.end(), [&](const PGL2Elem& g) { return order(g) == q + 1; });
  if (gen == cyc.end()) rep.fail("C_{j,C} has no element of order q+1");
  else rep.detail("generator", gen->str());

  const PGL2Elem t(fq.one(), (j * C).inv(), fq.zero(), fq.one());
  for (std::size_t ia = 1; ia < line.size(); ++ia) {
    const PGL2Elem& M = cyc[ia];
    const PGL2Elem reflected = t * M * t;
    if (reflected != M.inverse()) rep.fail("t M_A t != M_A^-1 at A=" + line[ia].str());
    if (M.inverse() != cyclic_ma(j, C, ProjPoint::finite(line[ia].value() + jinv))) {
      rep.fail("M_A^-1 != M_{A+1/j} at A=" + line[ia].str());
    }
    for (const auto& w : line) {
      if (M.act(w) == w) {
        rep.fail("M_A fixes " + w.str() + " at A=" + line[ia].str());
        break;
      }
    }
  }

  const auto dih = dihedral_group(j, C);
  if (std::adjacent_find(dih.begin(), dih.end()) != dih.end() || dih.size() != 2 * (q + 1)) {
    rep.fail("D_{j,C} does not have 2(q+1) distinct elements");
  }
  for (const auto& g : dih) {
    for (const auto& h : dih) {
      if (!contains(dih, g * h)) {
        rep.fail("D_{j,C} not closed: " + g.str() + " * " + h.str());
        break;
      }
    }
    if (!rep.pass) break;
  }
  return rep;
}

CheckReport verify_conjugation(unsigned n, Perturb perturb) {
  CheckReport rep("conjugation");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  const auto& fq = fq_for(n);
  const auto els = fq.elements();
  const auto ones = fq_one_set(n, fq);
  const FieldElem zero = fq.zero(), one = fq.one();

  // [[1,b],[0,1]] M_A [[1,b],[0,1]] with M_A = [[A,1],[1,A+1/j]], rescaled so BC = 1.
  for (const auto& j : ones) {
    for (const auto& b : els) {
      const FieldElem s = one + b + sqrt(b / j);
      FieldElem J = j + sqrt(b * j) + b * j;
      if (perturb == Perturb::rhs) J += b;
      if (trace_abs(J) != 1 || s.is_zero()) {
        rep.fail("Tr(J) != 1 at " + hex_pair("j", j, "b", b));
        continue;
      }
      const PGL2Elem tb(one, b, zero, one);
      for (const auto& A : els) {
        const PGL2Elem M(A, one, one, A + j.inv());
        const FieldElem Ap = (A + b) / s;
        const PGL2Elem want(Ap, s, s.inv(), Ap + J.inv());
        if (tb * M * tb != want) {
          rep.fail("conjugation by [[1,b],[0,1]] mismatch at " + hex_pair("j", j, "b", b) + " A=" + to_hex(A));
          break;
        }
      }
    }
  }

  // diag(C,1) M_A diag(1/C,1) = [[A,1],[1,A+1/j]]
  for (const auto& j : ones) {
    for (const auto& C : els) {
      if (C.is_zero()) continue;
      const PGL2Elem dc(C, zero, zero, one), dci(C.inv(), zero, zero, one);
      for (const auto& A : els) {
        if (dc * cyclic_ma(j, C, ProjPoint::finite(A)) * dci != cyclic_ma(j, one, ProjPoint::finite(A))) {
          rep.fail("diag(C,1) conjugation mismatch at " + hex_pair("j", j, "C", C) + " A=" + to_hex(A));
        }
      }
    }
  }

  // gamma = delta beta, delta in C_j, beta fixing infinity: exactly one way.
  const auto all = all_elements(fq);
  const auto cj = cyclic_group(ones.front(), one);
  for (const auto& g : all) {
    int ways = 0;
    for (const auto& d : cj) {
      if ((d.inverse() * g).C().is_zero()) ++ways;
    }
    if (ways != 1) {
      rep.fail(std::to_string(ways) + " delta-beta decompositions of " + g.str());
      break;
    }
  }

  // Every C_{j,C} is conjugate to C_{j0,1}.
  const auto& base = cj;
  const PGL2Elem gen = *std::find_if(base.begin(), base.end(), [&](const PGL2Elem& g) { return order(g) == (1u << n) + 1; });
  std::size_t found = 0, pairs = 0;
  for (const auto& j : ones) {
    for (const auto& C : els) {
      if (C.is_zero()) continue;
      ++pairs;
      auto target = cyclic_group(j, C);
      std::sort(target.begin(), target.end());
      for (const auto& g : all) {
        if (contains(target, g.inverse() * gen * g)) {
          ++found;
          break;
        }
      }
    }
  }
  rep.detail("cyclic_subgroups_conjugated", std::to_string(found) + "/" + std::to_string(pairs));
  if (found != pairs) rep.fail("some C_{j,C} is not conjugate to C_{" + to_hex(ones.front()) + ",1}");
  return rep;
}

CheckReport verify_dihedral_all(unsigned n, Perturb perturb) {
  CheckReport rep("dihedral");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  const auto& fq = fq_for(n);
  const auto ones = fq_one_set(n, fq);
  const std::vector<FieldElem> cs{fq.one(), fq.generator()};
  std::vector<CheckReport> parts(ones.size() * cs.size());
  parallel_for(parts.size(), [&](std::size_t i) {
    parts[i] = verify_dihedral(ones[i / cs.size()], cs[i % cs.size()], perturb);
  });
  std::size_t passed = 0;
  for (const auto& p : parts) {
    if (p.pass) ++passed;
    else rep.fail(*p.counterexample + " (j=" + p.params[1].second + ", C=" + p.params[2].second + ")");
  }
  rep.detail("pairs_passed", std::to_string(passed) + "/" + std::to_string(parts.size()));
  rep.absorb(verify_conjugation(n, perturb));
  return rep;
}

}  // namespace mcm
