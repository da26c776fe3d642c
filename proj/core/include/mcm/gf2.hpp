#pragma once

// Binary finite fields GF(2^m), 1 <= m <= 64.
//
// A FieldContext is created once per (degree, modulus) pair and interned for the
// lifetime of the process, so a `const FieldContext*` doubles as a context id and
// FieldElem can carry it as a plain pointer. Elements are bit vectors: bit i holds
// the coefficient of t^i, where t is the class of the indeterminate modulo the
// defining polynomial.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcm/numtheory.hpp"

namespace mcm {

/// Thrown when two operands live in different fields.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an invariant the mathematics guarantees turns out false; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class FieldContext;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldContext& ctx, std::uint64_t bits);

  std::uint64_t bits() const noexcept { return bits_; }
  const FieldContext& field() const;
  const FieldContext* context() const noexcept { return ctx_; }
  bool valid() const noexcept { return ctx_ != nullptr; }

  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }

  FieldElem square() const;
  /// Throws std::domain_error on zero.
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;
  /// x^(2^times)
  FieldElem frobenius(unsigned times) const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o) { return *this += o; }
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend FieldElem operator-(const FieldElem& a) { return a; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
  }
  /// Orders by integer encoding; elements of distinct fields order by context address.
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) noexcept {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return std::compare_three_way{}(a.ctx_, b.ctx_);
  }

 private:
  void check_same(const FieldElem& o) const;

  const FieldContext* ctx_ = nullptr;
  std::uint64_t bits_ = 0;
};

class FieldContext {
 public:
  /// GF(2^m) with the default modulus (smallest irreducible with nonzero constant term).
  static const FieldContext& make(unsigned m);
  /// GF(2^m) with an explicit modulus; the (m+1)-bit encoding must be irreducible of degree m.
  static const FieldContext& make(unsigned m, u128 modulus);

  static u128 default_modulus(unsigned m);
  static bool is_irreducible_gf2(u128 poly);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  unsigned degree() const noexcept { return m_; }
  u128 modulus() const noexcept { return modulus_; }
  std::uint64_t mask() const noexcept { return mask_; }
  /// Size of the multiplicative group, 2^m - 1.
  std::uint64_t group_order() const noexcept { return mask_; }

  FieldElem zero() const { return FieldElem(*this, 0); }
  FieldElem one() const { return FieldElem(*this, 1); }
  FieldElem elem(std::uint64_t bits) const { return FieldElem(*this, bits); }
  /// Smallest-encoding element of multiplicative order 2^m - 1.
  FieldElem generator() const { return FieldElem(*this, generator_); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!exp_.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_[log_[a] + log_[b]];
    }
    return reduce(clmul(a, b));
  }
  std::uint64_t sqr(std::uint64_t a) const { return mul(a, a); }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  int trace(std::uint64_t a) const { return __builtin_popcountll(a & trace_mask_) & 1; }

  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(std::uint64_t a) const;

  /// All 2^m elements in encoding order; only for m <= 24.
  std::vector<FieldElem> elements() const;

  /// "2^m/0xMOD"
  std::string describe() const;

  static u128 clmul(std::uint64_t a, std::uint64_t b);

 private:
  FieldContext(unsigned m, u128 modulus);
  std::uint64_t reduce(u128 x) const;

  unsigned m_;
  u128 modulus_;
  std::uint64_t mask_;
  std::uint64_t low_;  // modulus minus its leading term
  std::uint64_t trace_mask_ = 0;
  std::uint64_t generator_ = 1;
  std::vector<std::uint64_t> group_primes_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint64_t> exp_;
};

/// Absolute trace Tr_{GF(2^m)/GF(2)}, as 0 or 1.
int trace_abs(const FieldElem& x);

/// Solutions {z, z+1} of z^2 + z = c, or nullopt when Tr(c) = 1.
std::optional<std::pair<FieldElem, FieldElem>> solve_artin_schreier(const FieldElem& c);

/// Unique square root, x^(2^(m-1)).
FieldElem sqrt(const FieldElem& x);

/// <x> = x + 1/x; throws std::domain_error for x = 0.
FieldElem ang(const FieldElem& x);

/// Fixed injective homomorphism GF(2^m) -> GF(2^M), m | M. The class of t maps to the
/// smallest-encoding root of the source modulus in the target. Instances are cached.
class Embedding {
 public:
  static const Embedding& get(const FieldContext& sub, const FieldContext& sup);

  const FieldContext& sub() const noexcept { return *sub_; }
  const FieldContext& sup() const noexcept { return *sup_; }

  FieldElem operator()(const FieldElem& x) const;
  /// Inverse image of y, if y lies in the embedded subfield.
  std::optional<FieldElem> preimage(const FieldElem& y) const;

  Embedding(const FieldContext& sub, const FieldContext& sup);

 private:
  const FieldContext* sub_;
  const FieldContext* sup_;
  std::vector<std::uint64_t> basis_image_;  // image of t^i
  // Echelon data for preimage: rows_[i] has leading bit pivot_[i], combo_[i] tracks sources.
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> combo_;
  std::vector<int> pivot_;
};

FieldElem embed(const FieldContext& sub, const FieldContext& sup, const FieldElem& x);

/// The q+1 elements of mu_{q+1} (q = 2^n) inside `ambient`, as powers of a fixed
/// element of order q+1 (so element 0 is 1). Requires 2n | ambient degree.
std::vector<FieldElem> mu_subgroup(unsigned n, const FieldContext& ambient);

/// Elements of GF(2^n) with absolute trace 1 (resp. 0), in encoding order.
std::vector<FieldElem> fq_one_set(unsigned n, const FieldContext& ctx);
std::vector<FieldElem> fq_zero_set(unsigned n, const FieldContext& ctx);

// Text formats: fields as "2^m" or "2^m/0xMOD", elements as "0x..".
const FieldContext& parse_field(std::string_view text);
FieldElem parse_elem(const FieldContext& ctx, std::string_view text);
std::string to_hex(std::uint64_t v);
std::string to_hex(u128 v);
std::string to_hex(const FieldElem& x);

}  // namespace mcm
