#include "mcm/identities.hpp"

#include <algorithm>

#include "mcm/dickson.hpp"
#include "mcm/parallel.hpp"

namespace mcm {
namespace {

const FieldContext& fq_for(unsigned n) {
  if (n < 2 || n > 16) throw std::invalid_argument("identity checks need 2 <= n <= 16");
  return FieldContext::make(n);
}

BiPoly bi_product(std::span<const BiPoly> fs) {
  if (fs.size() == 1) return fs[0];
  const std::size_t mid = fs.size() / 2;
  return bi_product(fs.subspan(0, mid)) * bi_product(fs.subspan(mid));
}

}  // namespace

BiPoly::BiPoly(const FieldContext& ctx, std::vector<UPoly> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (const auto& p : c_) {
    if (p.context() != ctx_) throw ContextMismatch("BiPoly coefficient over a different field");
  }
  normalize();
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_y() const noexcept {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

UPoly BiPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : UPoly(*ctx_); }

std::size_t BiPoly::nonzero_terms() const noexcept {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const UPoly& p) { return !p.is_zero(); }));
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  if (a.ctx_ != b.ctx_) throw ContextMismatch("BiPolys over different fields");
  std::vector<UPoly> r(std::max(a.c_.size(), b.c_.size()), UPoly(*a.ctx_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return BiPoly(*a.ctx_, std::move(r));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.ctx_ != b.ctx_) throw ContextMismatch("BiPolys over different fields");
  if (a.c_.empty() || b.c_.empty()) return BiPoly(*a.ctx_);
  std::vector<UPoly> r(a.c_.size() + b.c_.size() - 1, UPoly(*a.ctx_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return BiPoly(*a.ctx_, std::move(r));
}

std::pair<BiPoly, BiPoly> main_identity_sides(unsigned n, Perturb perturb) {
  const auto& F = fq_for(n);
  const std::size_t q = std::size_t{1} << n;
  const UPoly d = dickson_poly(static_cast<unsigned>(q + 1), F);
  const UPoly Y = UPoly::x(F);

  std::vector<BiPoly> factors;
  for (const auto& w : F.elements()) {
    if (w.is_zero()) continue;
    std::vector<UPoly> cs;
    FieldElem wp = F.one();
    for (int i = 0; i <= d.degree(); ++i, wp *= w) cs.push_back(UPoly::constant(d.coeff(i) * wp));
    cs[0] += Y;
    factors.emplace_back(F, std::move(cs));
  }
  BiPoly lhs = bi_product(factors);

  std::vector<UPoly> rc(q * q, UPoly(F));
  rc[q * q - 1] = UPoly::constant(F.one());
  for (unsigned i = 1; i <= n; ++i) rc[q - 1] += UPoly::monomial(F.one(), q - (std::size_t{1} << i));
  if (perturb != Perturb::rhs) rc[0] += UPoly::monomial(F.one(), q - 1);
  return {std::move(lhs), BiPoly(F, std::move(rc))};
}

CheckReport verify_main_identity(unsigned n, Perturb perturb) {
  CheckReport rep("main-identity");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  const auto& F = fq_for(n);
  const std::size_t q = std::size_t{1} << n;
  const auto [lhs, rhs] = main_identity_sides(n, perturb);
  rep.detail("lhs_degree_x", std::to_string(lhs.degree_x())).detail("lhs_terms", std::to_string(lhs.nonzero_terms()));
  if (rhs.coeff(q - 1) != t_rev_poly(n, F).compose(UPoly::monomial(F.one(), 2))) {
    rep.fail("middle coefficient differs from T_rev(Y^2)");
  }
  for (std::size_t i = 0; i < std::max(lhs.coeffs().size(), rhs.coeffs().size()); ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      rep.fail("coefficient of X^" + std::to_string(i) + ": " + to_text(lhs.coeff(i)) + " vs " + to_text(rhs.coeff(i)));
      break;
    }
  }
  return rep;
}

CheckReport verify_cj_product(unsigned n, Perturb perturb) {
  CheckReport rep("cj-product");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  const auto& F = fq_for(n);
  const std::uint64_t q = 1ULL << n;
  std::vector<UPoly> quads;
  for (const auto& c : F.elements()) {
    if (c.is_zero()) continue;
    for (const auto& j : fq_one_set(n, F)) quads.push_back(UPoly(F, std::vector<FieldElem>{j / c, F.one(), c}));
  }
  const UPoly lhs = product(quads, F);
  const UPoly y = UPoly::x(F);
  UPoly rhs = UPoly::constant(F.one()) + (UPoly::monomial(F.one(), q) + y).pow(q - 1);
  if (perturb == Perturb::rhs) rhs += y;
  rep.detail("degree", std::to_string(lhs.degree()));
  if (lhs.degree() != static_cast<int>(q * (q - 1))) rep.fail("left side has degree " + std::to_string(lhs.degree()));
  if (lhs != rhs) {
    const UPoly diff = lhs + rhs;
    rep.fail("sides differ; lowest differing degree " +
             std::to_string(std::find_if(diff.raw().begin(), diff.raw().end(), [](auto v) { return v != 0; }) - diff.raw().begin()));
  }
  return rep;
}

RationalFn RationalFn::compose(const UPoly& g) const { return {num.compose(g), den.compose(g)}; }

RationalFn RationalFn::reciprocal() const {
  const int dn = num.degree(), dd = den.degree();
  if (dn >= dd) return {num.reverse(), den.reverse().shift(static_cast<std::size_t>(dn - dd))};
  return {num.reverse().shift(static_cast<std::size_t>(dd - dn)), den.reverse()};
}

FieldElem RationalFn::eval(const FieldElem& y) const {
  const auto& F = y.field();
  const UPoly n = num.context() == &F ? num : num.lift(F);
  const UPoly d = den.context() == &F ? den : den.lift(F);
  const FieldElem dv = d(y);
  if (dv.is_zero()) throw std::domain_error("rational function has a pole at " + to_hex(y));
  return n(y) / dv;
}

RationalFn e_rational(unsigned n, const FieldElem& c, const FieldElem& j) {
  const auto& F = fq_for(n);
  if (c.context() != &F || j.context() != &F) throw ContextMismatch("e_rational: c and j must lie in GF(2^n)");
  if (c.is_zero()) throw std::invalid_argument("e_rational: c must be nonzero");
  if (trace_abs(j) != 1) throw std::invalid_argument("e_rational: j must have trace 1");
  const std::uint64_t q = 1ULL << n;
  const UPoly inner(F, std::vector<FieldElem>{j / c, F.one(), c});
  const UPoly xi = UPoly::monomial(F.one(), q) + UPoly::x(F);
  return {inner.pow(q + 1), xi * xi};
}

CheckReport verify_e_transformations(unsigned n, Perturb perturb) {
  CheckReport rep("e-transforms");
  rep.param("n", std::to_string(n));
  ReportTimer timer(rep);
  const auto& F = fq_for(n);
  std::vector<FieldElem> units;
  for (const auto& x : F.elements()) {
    if (!x.is_zero()) units.push_back(x);
  }
  const auto ones = fq_one_set(n, F);
  const UPoly y = UPoly::x(F);

  std::vector<std::optional<std::string>> errors(units.size());
  parallel_for(units.size(), [&](std::size_t ib) {
    const FieldElem& b = units[ib];
    const UPoly shift = y + UPoly::constant(b);
    const UPoly scale = y * b;
    for (const auto& c : units) {
      for (const auto& j : ones) {
        const RationalFn e = e_rational(n, c, j);
        const std::string where = " at b=" + to_hex(b) + " c=" + to_hex(c) + " j=" + to_hex(j);
        const FieldElem bc = b * c;
        const FieldElem j2 = perturb == Perturb::rhs ? j : j + bc + bc.square();
        if (trace_abs(j + bc + bc.square()) != 1) {
          errors[ib] = "Tr(j+bc+(bc)^2) != 1" + where;
          return;
        }
        if (e.compose(shift) != e_rational(n, c, j2)) {
          errors[ib] = "shift law fails" + where;
          return;
        }
        if (e.compose(scale) != e_rational(n, bc, j)) {
          errors[ib] = "scaling law fails" + where;
          return;
        }
        if (ib == 0 && e.reciprocal() != e_rational(n, j / c, j)) {
          errors[ib] = "inversion law fails" + where;
          return;
        }
      }
    }
  });
  std::size_t ok = 0;
  for (const auto& e : errors) {
    if (e) rep.fail(*e);
    else ++ok;
  }
  rep.detail("b_values_passed", std::to_string(ok) + "/" + std::to_string(units.size()));
  return rep;
}

CheckReport verify_root_product(const SplitFrame& f, Perturb perturb) {
  CheckReport rep("root-product");
  rep.param("n", std::to_string(f.n)).param("k", std::to_string(f.k)).param("a", to_hex(f.a));
  ReportTimer timer(rep);
  const auto& A = *f.ambient;
  const std::uint64_t q = f.q();
  const auto table = root_table(f);
  std::vector<UPoly> linears;
  std::vector<FieldElem> es;
  for (const auto& t : table) {
    const std::string where = " at c=" + to_hex(t.c) + " j=" + to_hex(t.j);
    if (c_eval(f.n, t.e) != f.a_up) rep.fail("C(e) != a" + where);
    if (e_rational(f.n, t.c, t.j).eval(f.y) != t.e) rep.fail("e_rational disagrees with the frame value" + where);
    linears.push_back(UPoly(A, std::vector<FieldElem>{t.e, A.one()}));
    es.push_back(t.e);
  }
  std::sort(es.begin(), es.end());
  if (std::adjacent_find(es.begin(), es.end()) != es.end()) rep.fail("(c,j) -> e(y,c,j) is not injective");
  if (es.size() != (q / 2) * (q - 1)) rep.fail("expected (q/2)(q-1) roots");

  const UPoly lhs = product(linears, A);
  UPoly rhs = c_poly(f.n, A) + UPoly::constant(f.a_up);
  if (perturb == Perturb::rhs) rhs += UPoly::x(A);
  if (lhs.coeff(0) != f.a_up) rep.fail("product of the roots is " + to_hex(lhs.coeff(0)) + ", not a");
  if (lhs != rhs) rep.fail("prod (X - e(y,c,j)) != C(X) + a for a=" + to_hex(f.a));
  return rep;
}

}  // namespace mcm
