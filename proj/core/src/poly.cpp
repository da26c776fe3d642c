#include "mcm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mcm {

UPoly::UPoly(const FieldContext& ctx, std::vector<std::uint64_t> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
  for (auto v : c_) {
    if (v & ~ctx.mask()) throw std::invalid_argument("coefficient " + to_hex(v) + " out of range");
  }
  normalize();
}

UPoly::UPoly(const FieldContext& ctx, const std::vector<FieldElem>& coeffs) : ctx_(&ctx) {
  c_.reserve(coeffs.size());
  for (const auto& e : coeffs) {
    if (e.context() != &ctx) throw ContextMismatch("coefficient from a different field");
    c_.push_back(e.bits());
  }
  normalize();
}

UPoly UPoly::constant(const FieldElem& c) { return UPoly(c.field(), std::vector<std::uint64_t>{c.bits()}); }

UPoly UPoly::monomial(const FieldElem& c, std::size_t deg) {
  std::vector<std::uint64_t> v(deg + 1, 0);
  v[deg] = c.bits();
  return UPoly(c.field(), std::move(v));
}

UPoly UPoly::x(const FieldContext& ctx) { return monomial(ctx.one(), 1); }

const FieldContext& UPoly::field() const {
  if (!ctx_) throw std::logic_error("use of default-constructed UPoly");
  return *ctx_;
}

void UPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void UPoly::check_same(const UPoly& o) const {
  if (ctx_ != o.ctx_ || ctx_ == nullptr) throw ContextMismatch("polynomials over different fields");
}

FieldElem UPoly::coeff(std::size_t i) const { return field().elem(i < c_.size() ? c_[i] : 0); }

FieldElem UPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return field().elem(c_.back());
}

UPoly& UPoly::operator+=(const UPoly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] ^= o.c_[i];
  normalize();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return UPoly(*a.ctx_);
  const auto& F = *a.ctx_;
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] ^= F.mul(ai, b.c_[j]);
  }
  UPoly out(F);
  out.c_ = std::move(r);
  out.normalize();
  return out;
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const FieldElem& s) {
  if (s.context() != ctx_) throw ContextMismatch("scalar from a different field");
  for (auto& v : c_) v = ctx_->mul(v, s.bits());
  normalize();
  return *this;
}

FieldElem UPoly::operator()(const FieldElem& x) const {
  if (x.context() != ctx_) throw ContextMismatch("evaluation point from a different field");
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ctx_->mul(acc, x.bits()) ^ *it;
  return ctx_->elem(acc);
}

UPoly UPoly::derivative() const {
  UPoly out(field());
  if (c_.size() <= 1) return out;
  out.c_.assign(c_.size() - 1, 0);
  for (std::size_t i = 1; i < c_.size(); i += 2) out.c_[i - 1] = c_[i];
  out.normalize();
  return out;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

UPoly UPoly::compose(const UPoly& g) const {
  check_same(g);
  UPoly acc(*ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * g;
    acc += UPoly(*ctx_, std::vector<std::uint64_t>{*it});
  }
  return acc;
}

UPoly UPoly::reverse() const {
  UPoly out(field());
  out.c_.assign(c_.rbegin(), c_.rend());
  out.normalize();
  return out;
}

UPoly UPoly::shift(std::size_t k) const {
  if (is_zero()) return *this;
  UPoly out(field());
  out.c_.assign(k, 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

UPoly UPoly::pow(std::uint64_t e) const {
  UPoly r = constant(field().one());
  UPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

UPoly UPoly::sqrt_coeffs() const {
  UPoly out(field());
  if (is_zero()) return out;
  out.c_.assign(c_.size() / 2 + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % 2) throw std::invalid_argument("sqrt_coeffs: odd-degree term present");
    out.c_[i / 2] = mcm::sqrt(ctx_->elem(c_[i])).bits();
  }
  out.normalize();
  return out;
}

UPoly UPoly::lift(const FieldContext& sup) const {
  const auto& emb = Embedding::get(field(), sup);
  std::vector<std::uint64_t> v;
  v.reserve(c_.size());
  for (auto x : c_) v.push_back(emb(ctx_->elem(x)).bits());
  return UPoly(sup, std::move(v));
}

// ---------------------------------------------------------------------------

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  if (f.context() != g.context()) throw ContextMismatch("polynomials over different fields");
  const auto& F = f.field();
  if (f.degree() < g.degree()) return {UPoly(F), f};
  std::vector<std::uint64_t> r(f.raw().begin(), f.raw().end());
  const auto gr = g.raw();
  const std::size_t dg = gr.size() - 1;
  const std::uint64_t lc_inv = F.inv(gr.back());
  std::vector<std::uint64_t> q(r.size() - dg, 0);
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i] == 0) continue;
    const std::uint64_t t = F.mul(r[i], lc_inv);
    q[i - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] ^= F.mul(t, gr[j]);
  }
  r.resize(dg);
  return {UPoly(F, std::move(q)), UPoly(F, std::move(r))};
}

UPoly operator%(const UPoly& f, const UPoly& g) { return divrem(f, g).second; }
UPoly operator/(const UPoly& f, const UPoly& g) { return divrem(f, g).first; }

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& mod) { return (a * b) % mod; }

UPoly pow_mod(const UPoly& base, std::uint64_t e, const UPoly& mod) {
  UPoly r = UPoly::constant(mod.field().one()) % mod;
  UPoly b = base % mod;
  while (e) {
    if (e & 1) r = mulmod(r, b, mod);
    e >>= 1;
    if (e) b = mulmod(b, b, mod);
  }
  return r;
}

UPoly frobenius_mod(const UPoly& base, std::uint64_t k, const UPoly& mod) {
  UPoly b = base % mod;
  for (std::uint64_t i = 0; i < k; ++i) b = mulmod(b, b, mod);
  return b;
}

UPoly product(std::span<const UPoly> factors, const FieldContext& ctx) {
  if (factors.empty()) return UPoly::constant(ctx.one());
  if (factors.size() == 1) return factors[0];
  const std::size_t mid = factors.size() / 2;
  return product(factors.subspan(0, mid), ctx) * product(factors.subspan(mid), ctx);
}

// ---------------------------------------------------------------------------

std::string FactType::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}

unsigned FactType::total() const {
  unsigned s = 0;
  for (auto p : parts) s += p;
  return s;
}

std::size_t FactType::count(unsigned d) const { return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), d)); }

FactType parse_fact_type(std::string_view text) {
  FactType t;
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw std::invalid_argument("malformed factorization type");
  text = text.substr(1, text.size() - 2);
  while (!text.empty()) {
    const auto comma = text.find(',');
    t.parts.push_back(static_cast<unsigned>(std::stoul(std::string(text.substr(0, comma)))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

// ---------------------------------------------------------------------------

std::string to_text(const UPoly& f) {
  if (f.is_zero()) return "0x0";
  std::string s;
  for (std::size_t i = 0; i < f.raw().size(); ++i) {
    if (i) s += ',';
    s += to_hex(f.raw()[i]);
  }
  return s;
}

UPoly parse_poly(const FieldContext& ctx, std::string_view text) {
  std::vector<std::uint64_t> c;
  while (true) {
    const auto comma = text.find(',');
    c.push_back(parse_elem(ctx, text.substr(0, comma)).bits());
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return UPoly(ctx, std::move(c));
}

}  // namespace mcm
