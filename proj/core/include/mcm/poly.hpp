#pragma once

// Dense univariate polynomials over GF(2^m) and their factorization.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcm/gf2.hpp"

namespace mcm {

class UPoly {
 public:
  UPoly() = default;
  /// The zero polynomial over ctx.
  explicit UPoly(const FieldContext& ctx) : ctx_(&ctx) {}
  /// Coefficients lowest degree first; trailing zeros are dropped.
  UPoly(const FieldContext& ctx, std::vector<std::uint64_t> coeffs);
  UPoly(const FieldContext& ctx, const std::vector<FieldElem>& coeffs);

  static UPoly constant(const FieldElem& c);
  static UPoly monomial(const FieldElem& c, std::size_t deg);
  /// The indeterminate x.
  static UPoly x(const FieldContext& ctx);

  const FieldContext& field() const;
  const FieldContext* context() const noexcept { return ctx_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  FieldElem coeff(std::size_t i) const;
  FieldElem leading() const;
  std::span<const std::uint64_t> raw() const noexcept { return c_; }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o) { return *this += o; }
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const FieldElem& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const FieldElem& s) { return a *= s; }
  friend UPoly operator*(const FieldElem& s, UPoly a) { return a *= s; }

  friend bool operator==(const UPoly& a, const UPoly& b) noexcept { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

  FieldElem operator()(const FieldElem& x) const;

  /// Formal derivative; in characteristic 2 the even-degree terms vanish.
  UPoly derivative() const;
  UPoly monic() const;
  /// f(g(x))
  UPoly compose(const UPoly& g) const;
  /// x^deg f(1/x)
  UPoly reverse() const;
  /// Multiplies by x^k.
  UPoly shift(std::size_t k) const;
  UPoly pow(std::uint64_t e) const;
  /// Coefficientwise square root: the unique g with g^2 = f when f' = 0.
  UPoly sqrt_coeffs() const;
  /// Image under the cached embedding of the coefficient field into sup.
  UPoly lift(const FieldContext& sup) const;

 private:
  void normalize();
  void check_same(const UPoly& o) const;

  const FieldContext* ctx_ = nullptr;
  std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; throws std::domain_error for a zero divisor.
std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g);
UPoly operator%(const UPoly& f, const UPoly& g);
UPoly operator/(const UPoly& f, const UPoly& g);
/// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& mod);
UPoly pow_mod(const UPoly& base, std::uint64_t e, const UPoly& mod);
/// base^(2^k) mod `mod`.
UPoly frobenius_mod(const UPoly& base, std::uint64_t k, const UPoly& mod);
/// Balanced product tree.
UPoly product(std::span<const UPoly> factors, const FieldContext& ctx);

/// Multiset of irreducible-factor degrees, ascending.
struct FactType {
  std::vector<unsigned> parts;

  std::string str() const;
  unsigned total() const;
  std::size_t count(unsigned d) const;
  friend bool operator==(const FactType&, const FactType&) = default;
};

FactType parse_fact_type(std::string_view text);

struct Factor {
  UPoly poly;  // monic irreducible
  unsigned multiplicity;
};

/// Complete factorization of a nonzero polynomial into monic irreducibles. Output is
/// sorted by (degree, coefficients) so the result does not depend on the seed.
std::vector<Factor> factor(const UPoly& f, std::uint64_t seed);

/// Degree-d distinct-degree pieces of a squarefree monic polynomial.
std::vector<std::pair<UPoly, unsigned>> distinct_degree_factor(const UPoly& f);

bool is_irreducible(const UPoly& f);

FactType fact_type(const UPoly& f, std::uint64_t seed);

/// lcm of the irreducible-factor degrees.
unsigned splitting_degree(const UPoly& f, std::uint64_t seed);

struct SplitRoots {
  const FieldContext* field;
  std::vector<FieldElem> roots;
};

/// Builds GF(2^(k * splitting degree)) and returns every root there, ascending by encoding.
/// f must be squarefree.
SplitRoots roots_in_splitting_field(const UPoly& f, std::uint64_t seed);

/// Distinct roots of f lying in its own coefficient field, ascending by encoding.
std::vector<FieldElem> roots_in_field(const UPoly& f, std::uint64_t seed);

/// Comma-separated hex coefficients, lowest degree first ("0x1,0x1,0x0,0x0,0x0,0x1").
std::string to_text(const UPoly& f);
UPoly parse_poly(const FieldContext& ctx, std::string_view text);

}  // namespace mcm
