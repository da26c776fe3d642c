#include "mcm/gf2.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#if defined(__x86_64__)
#include <wmmintrin.h>
#endif

namespace mcm {
namespace {

int deg128(u128 x) {
  if (x == 0) return -1;
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  if (hi) return 127 - __builtin_clzll(hi);
  return 63 - __builtin_clzll(static_cast<std::uint64_t>(x));
}

u128 clmul_soft(std::uint64_t a, std::uint64_t b) {
  u128 table[16];
  table[0] = 0;
  table[1] = a;
  for (int i = 2; i < 16; i += 2) {
    table[i] = table[i / 2] << 1;
    table[i + 1] = table[i] ^ a;
  }
  u128 r = 0;
  for (int shift = 60; shift >= 0; shift -= 4) {
    r = (r << 4) ^ table[(b >> shift) & 0xF];
  }
  return r;
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse2"))) u128 clmul_hw(std::uint64_t a, std::uint64_t b) {
  const __m128i x = _mm_cvtsi64_si128(static_cast<long long>(a));
  const __m128i y = _mm_cvtsi64_si128(static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(x, y, 0);
  alignas(16) std::uint64_t out[2];
  _mm_store_si128(reinterpret_cast<__m128i*>(out), r);
  return (static_cast<u128>(out[1]) << 64) | out[0];
}

using ClmulFn = u128 (*)(std::uint64_t, std::uint64_t);
const ClmulFn kClmul = [] {
  __builtin_cpu_init();
  return __builtin_cpu_supports("pclmul") ? &clmul_hw : &clmul_soft;
}();
#endif

// Polynomial arithmetic over GF(2) with u128 encodings, used for modulus validation.
u128 mod_gf2x(u128 x, u128 f) {
  const int df = deg128(f);
  for (int d = deg128(x); d >= df; d = deg128(x)) x ^= f << (d - df);
  return x;
}

u128 mulmod_gf2x(u128 a, u128 b, u128 f) {
  // a, b have degree < deg f <= 64.
  return mod_gf2x(FieldContext::clmul(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)), f);
}

u128 gcd_gf2x(u128 a, u128 b) {
  while (b != 0) {
    a = mod_gf2x(a, b);
    std::swap(a, b);
  }
  return a;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(const FieldContext& ctx, std::uint64_t bits) : ctx_(&ctx), bits_(bits) {
  if ((bits & ~ctx.mask()) != 0) {
    throw std::invalid_argument("element " + to_hex(bits) + " out of range for GF(2^" +
                                std::to_string(ctx.degree()) + ")");
  }
}

const FieldContext& FieldElem::field() const {
  if (!ctx_) throw std::logic_error("use of default-constructed FieldElem");
  return *ctx_;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (ctx_ != o.ctx_ || ctx_ == nullptr) {
    throw ContextMismatch("operands belong to different fields");
  }
}

FieldElem FieldElem::square() const { return FieldElem(field(), field().sqr(bits_)); }

FieldElem FieldElem::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return FieldElem(field(), field().inv(bits_));
}

FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(field(), field().pow(bits_, e)); }

FieldElem FieldElem::frobenius(unsigned times) const {
  const auto& f = field();
  std::uint64_t v = bits_;
  for (unsigned i = 0; i < times % f.degree(); ++i) v = f.sqr(v);
  return FieldElem(f, v);
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  check_same(o);
  bits_ ^= o.bits_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  check_same(o);
  bits_ = ctx_->mul(bits_, o.bits_);
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  check_same(o);
  if (o.is_zero()) throw std::domain_error("division by zero");
  bits_ = ctx_->mul(bits_, ctx_->inv(o.bits_));
  return *this;
}

// ---------------------------------------------------------------------------
// FieldContext

u128 FieldContext::clmul(std::uint64_t a, std::uint64_t b) {
#if defined(__x86_64__)
  return kClmul(a, b);
#else
  return clmul_soft(a, b);
#endif
}

bool FieldContext::is_irreducible_gf2(u128 poly) {
  const int d = deg128(poly);
  if (d < 1 || d > 64) return false;
  if (d == 1) return true;
  if ((poly & 1) == 0) return false;
  // Rabin: x^(2^d) = x mod f, and gcd(x^(2^(d/p)) - x, f) = 1 for primes p | d.
  auto frob = [&](int k) {
    u128 x = 2;
    for (int i = 0; i < k; ++i) x = mulmod_gf2x(x, x, poly);
    return x;
  };
  if (frob(d) != 2) return false;
  for (auto p : prime_factors(static_cast<std::uint64_t>(d))) {
    const u128 g = gcd_gf2x(poly, frob(d / static_cast<int>(p)) ^ 2);
    if (deg128(g) != 0) return false;
  }
  return true;
}

u128 FieldContext::default_modulus(unsigned m) {
  if (m < 1 || m > 64) throw std::invalid_argument("field degree must be in [1, 64]");
  static std::map<unsigned, u128> cache;
  {
    std::lock_guard lock(registry_mutex());
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  u128 f = (static_cast<u128>(1) << m) | 1;
  while (!is_irreducible_gf2(f)) f += 2;
  std::lock_guard lock(registry_mutex());
  cache.emplace(m, f);
  return f;
}

const FieldContext& FieldContext::make(unsigned m) { return make(m, default_modulus(m)); }

const FieldContext& FieldContext::make(unsigned m, u128 modulus) {
  if (m < 1 || m > 64) throw std::invalid_argument("field degree must be in [1, 64]");
  if (deg128(modulus) != static_cast<int>(m)) {
    throw std::invalid_argument("modulus " + to_hex(modulus) + " does not have degree " + std::to_string(m));
  }
  if (!is_irreducible_gf2(modulus)) {
    throw std::invalid_argument("modulus " + to_hex(modulus) + " is reducible over GF(2)");
  }
  static std::map<std::pair<unsigned, u128>, std::unique_ptr<FieldContext>> registry;
  const auto key = std::make_pair(m, modulus);
  {
    std::lock_guard lock(registry_mutex());
    if (auto it = registry.find(key); it != registry.end()) return *it->second;
  }
  std::unique_ptr<FieldContext> ctx(new FieldContext(m, modulus));
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry.emplace(key, std::move(ctx));
  return *it->second;
}

FieldContext::FieldContext(unsigned m, u128 modulus)
    : m_(m),
      modulus_(modulus),
      mask_(m == 64 ? ~0ULL : ((1ULL << m) - 1)),
      low_(static_cast<std::uint64_t>(modulus) & (m == 64 ? ~0ULL : ((1ULL << m) - 1))) {
  for (unsigned i = 0; i < m_; ++i) {
    std::uint64_t x = m_ == 1 ? 1 : (1ULL << i);
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < m_; ++j) {
      acc ^= x;
      x = sqr(x);
    }
    if (acc & 1) trace_mask_ |= 1ULL << i;
  }

  group_primes_ = mask_ > 1 ? prime_factors(mask_) : std::vector<std::uint64_t>{};
  for (std::uint64_t g = (m_ == 1 ? 1 : 2);; ++g) {
    bool ok = true;
    for (auto p : group_primes_) {
      if (pow(g, mask_ / p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      generator_ = g;
      break;
    }
  }

  if (m_ <= 16) {
    const std::uint64_t n = mask_;
    exp_.assign(2 * n + 1, 0);
    log_.assign(n + 1, 0);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = x;
      exp_[i + n] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = reduce(clmul(x, generator_));
    }
    exp_[2 * n] = exp_[0];
  }
}

std::uint64_t FieldContext::reduce(u128 x) const {
  if (m_ == 64) {
    for (auto hi = static_cast<std::uint64_t>(x >> 64); hi != 0; hi = static_cast<std::uint64_t>(x >> 64)) {
      x = (x & mask_) ^ clmul(hi, low_);
    }
    return static_cast<std::uint64_t>(x);
  }
  for (u128 hi = x >> m_; hi != 0; hi = x >> m_) {
    x = (x & mask_) ^ clmul(static_cast<std::uint64_t>(hi), low_);
  }
  return static_cast<std::uint64_t>(x);
}

std::uint64_t FieldContext::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!exp_.empty()) return exp_[mask_ - log_[a]];
  return pow(a, mask_ - 1);
}

std::uint64_t FieldContext::pow(std::uint64_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const auto l = static_cast<u128>(log_[a]) * e % mask_;
    return exp_[static_cast<std::uint64_t>(l)];
  }
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldContext::element_order(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t ord = mask_;
  for (auto p : group_primes_) {
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

std::vector<FieldElem> FieldContext::elements() const {
  if (m_ > 24) throw std::invalid_argument("field too large to enumerate");
  std::vector<FieldElem> out;
  out.reserve(mask_ + 1);
  for (std::uint64_t v = 0; v <= mask_; ++v) out.emplace_back(*this, v);
  return out;
}

std::string FieldContext::describe() const { return "2^" + std::to_string(m_) + "/" + to_hex(modulus_); }

// ---------------------------------------------------------------------------
// Scalar helpers

int trace_abs(const FieldElem& x) { return x.field().trace(x.bits()); }

std::optional<std::pair<FieldElem, FieldElem>> solve_artin_schreier(const FieldElem& c) {
  const auto& f = c.field();
  if (f.trace(c.bits()) != 0) return std::nullopt;
  const unsigned m = f.degree();
  FieldElem z = f.zero();
  if (m % 2 == 1) {
    // Half-trace: sum_{i=0}^{(m-1)/2} c^(4^i).
    FieldElem t = c;
    for (unsigned i = 0; i <= (m - 1) / 2; ++i) {
      z += t;
      t = t.square().square();
    }
  } else {
    // Solve the GF(2)-linear system L(z) = z^2 + z = c, with L given on the basis t^i.
    std::vector<std::uint64_t> rows, combo;
    std::vector<int> piv;
    for (unsigned i = 0; i < m; ++i) {
      const std::uint64_t b = 1ULL << i;
      std::uint64_t r = f.sqr(b) ^ b;
      std::uint64_t cm = b;
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if ((r >> piv[k]) & 1) {
          r ^= rows[k];
          cm ^= combo[k];
        }
      }
      if (r == 0) continue;
      rows.push_back(r);
      combo.push_back(cm);
      piv.push_back(63 - __builtin_clzll(r));
    }
    std::uint64_t target = c.bits(), sol = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if ((target >> piv[k]) & 1) {
        target ^= rows[k];
        sol ^= combo[k];
      }
    }
    if (target != 0) throw InternalError("Artin-Schreier system inconsistent despite trace 0");
    z = f.elem(sol);
  }
  if (z.square() + z != c) throw InternalError("Artin-Schreier solution failed verification");
  return std::make_pair(std::min(z, z + f.one()), std::max(z, z + f.one()));
}

FieldElem sqrt(const FieldElem& x) { return x.frobenius(x.field().degree() - 1); }

FieldElem ang(const FieldElem& x) {
  if (x.is_zero()) throw std::domain_error("<x> undefined at x = 0");
  return x + x.inv();
}

// ---------------------------------------------------------------------------
// Embeddings

Embedding::Embedding(const FieldContext& sub, const FieldContext& sup) : sub_(&sub), sup_(&sup) {
  const unsigned m = sub.degree(), M = sup.degree();
  if (M % m != 0) {
    throw std::invalid_argument("cannot embed GF(2^" + std::to_string(m) + ") into GF(2^" + std::to_string(M) + ")");
  }
  std::uint64_t root = 1;
  if (&sub == &sup && m > 1) {
    root = 2;
  } else if (m > 1) {
    if (m > 28) throw std::invalid_argument("embedding search limited to subfields of degree <= 28");
    const std::uint64_t h = sup.pow(sup.generator().bits(), sup.group_order() / sub.group_order());
    const u128 f = sub.modulus();
    bool found = false;
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i < sub.group_order(); ++i, x = sup.mul(x, h)) {
      std::uint64_t acc = 0;
      for (int b = static_cast<int>(m); b >= 0; --b) {
        acc = sup.mul(acc, x) ^ static_cast<std::uint64_t>((f >> b) & 1);
      }
      if (acc == 0 && (!found || x < root)) {
        root = x;
        found = true;
      }
    }
    if (!found) throw InternalError("no root of the subfield modulus found in the extension");
  }
  std::uint64_t p = 1;
  for (unsigned i = 0; i < m; ++i) {
    basis_image_.push_back(p);
    p = sup.mul(p, root);
  }
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t r = basis_image_[i], cm = 1ULL << i;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if ((r >> pivot_[k]) & 1) {
        r ^= rows_[k];
        cm ^= combo_[k];
      }
    }
    if (r == 0) throw InternalError("embedding is not injective");
    rows_.push_back(r);
    combo_.push_back(cm);
    pivot_.push_back(63 - __builtin_clzll(r));
  }
}

const Embedding& Embedding::get(const FieldContext& sub, const FieldContext& sup) {
  static std::map<std::pair<const FieldContext*, const FieldContext*>, std::unique_ptr<Embedding>> cache;
  static std::mutex mu;
  const auto key = std::make_pair(&sub, &sup);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto e = std::make_unique<Embedding>(sub, sup);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(e));
  return *it->second;
}

FieldElem Embedding::operator()(const FieldElem& x) const {
  if (x.context() != sub_) throw ContextMismatch("embedding applied to an element of the wrong field");
  std::uint64_t v = 0;
  for (std::uint64_t b = x.bits(); b; b &= b - 1) v ^= basis_image_[__builtin_ctzll(b)];
  return FieldElem(*sup_, v);
}

std::optional<FieldElem> Embedding::preimage(const FieldElem& y) const {
  if (y.context() != sup_) throw ContextMismatch("preimage requested for an element of the wrong field");
  std::uint64_t t = y.bits(), sol = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if ((t >> pivot_[k]) & 1) {
      t ^= rows_[k];
      sol ^= combo_[k];
    }
  }
  if (t != 0) return std::nullopt;
  return FieldElem(*sub_, sol);
}

FieldElem embed(const FieldContext& sub, const FieldContext& sup, const FieldElem& x) {
  return Embedding::get(sub, sup)(x);
}

// ---------------------------------------------------------------------------
// Distinguished subsets

std::vector<FieldElem> mu_subgroup(unsigned n, const FieldContext& ambient) {
  if (n < 1 || n > 31 || ambient.degree() % (2 * n) != 0) {
    throw std::invalid_argument("mu_{q+1} needs 2n | ambient degree (n = " + std::to_string(n) + ", degree " +
                                std::to_string(ambient.degree()) + ")");
  }
  const std::uint64_t q1 = (1ULL << n) + 1;
  const FieldElem h = ambient.generator().pow(ambient.group_order() / q1);
  std::vector<FieldElem> out;
  out.reserve(q1);
  FieldElem x = ambient.one();
  for (std::uint64_t i = 0; i < q1; ++i, x *= h) out.push_back(x);
  return out;
}

std::vector<FieldElem> fq_one_set(unsigned n, const FieldContext& ctx) {
  if (ctx.degree() != n) throw std::invalid_argument("fq_one_set: context degree must equal n");
  std::vector<FieldElem> out;
  for (const auto& x : ctx.elements()) {
    if (trace_abs(x) == 1) out.push_back(x);
  }
  return out;
}

std::vector<FieldElem> fq_zero_set(unsigned n, const FieldContext& ctx) {
  if (ctx.degree() != n) throw std::invalid_argument("fq_zero_set: context degree must equal n");
  std::vector<FieldElem> out;
  for (const auto& x : ctx.elements()) {
    if (trace_abs(x) == 0) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text

namespace {

u128 parse_hex128(std::string_view s) {
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 32) throw std::invalid_argument("malformed hex value");
  u128 v = 0;
  for (char ch : s) {
    int d;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
    else throw std::invalid_argument("malformed hex value '" + std::string(s) + "'");
    v = (v << 4) | static_cast<u128>(d);
  }
  return v;
}

}  // namespace

const FieldContext& parse_field(std::string_view text) {
  if (text.size() < 3 || text.substr(0, 2) != "2^") {
    throw std::invalid_argument("field must be written 2^m or 2^m/0xMODULUS");
  }
  text.remove_prefix(2);
  const auto slash = text.find('/');
  const std::string deg(text.substr(0, slash));
  unsigned m = 0;
  try {
    std::size_t used = 0;
    m = static_cast<unsigned>(std::stoul(deg, &used));
    if (used != deg.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed field degree '" + deg + "'");
  }
  if (slash == std::string_view::npos) return FieldContext::make(m);
  return FieldContext::make(m, parse_hex128(text.substr(slash + 1)));
}

FieldElem parse_elem(const FieldContext& ctx, std::string_view text) {
  const u128 v = parse_hex128(text);
  if (v > ctx.mask()) throw std::invalid_argument("element " + std::string(text) + " out of range");
  return ctx.elem(static_cast<std::uint64_t>(v));
}

std::string to_hex(u128 v) {
  if (v == 0) return "0x0";
  std::string s;
  while (v) {
    s.push_back("0123456789abcdef"[static_cast<int>(v & 0xF)]);
    v >>= 4;
  }
  std::reverse(s.begin(), s.end());
  return "0x" + s;
}

std::string to_hex(std::uint64_t v) { return to_hex(static_cast<u128>(v)); }

std::string to_hex(const FieldElem& x) { return to_hex(x.bits()); }

}  // namespace mcm
