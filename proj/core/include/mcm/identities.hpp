#pragma once

// Exact polynomial identities in F_q[X, Y] and F_q(y).

#include <utility>
#include <vector>

#include "mcm/poly.hpp"
#include "mcm/report.hpp"
#include "mcm/splitting.hpp"

namespace mcm {

/// Polynomial in X with coefficients in F[Y].
class BiPoly {
 public:
  explicit BiPoly(const FieldContext& ctx) : ctx_(&ctx) {}
  /// coeffs[i] is the coefficient of X^i.
  BiPoly(const FieldContext& ctx, std::vector<UPoly> coeffs);

  const FieldContext& field() const { return *ctx_; }
  /// -1 for zero.
  int degree_x() const noexcept { return static_cast<int>(c_.size()) - 1; }
  int degree_y() const noexcept;
  /// Zero polynomial in Y beyond the X-degree.
  UPoly coeff(std::size_t i) const;
  const std::vector<UPoly>& coeffs() const noexcept { return c_; }
  std::size_t nonzero_terms() const noexcept;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) noexcept { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

 private:
  void normalize();

  const FieldContext* ctx_;
  std::vector<UPoly> c_;
};

/// The two sides of
///   prod_{w in F_q^x} (D_{q+1}(wX) + Y) = X^(q^2-1) + (sum_{i=1}^n Y^(q-2^i)) X^(q-1) + Y^(q-1).
/// With Perturb::rhs the Y^(q-1) term is left out of the right side.
std::pair<BiPoly, BiPoly> main_identity_sides(unsigned n, Perturb perturb = Perturb::none);
CheckReport verify_main_identity(unsigned n, Perturb perturb = Perturb::none);

/// prod_{c in F_q^x, j in F_{q,1}} (c y^2 + y + j/c) = 1 + (y^q + y)^(q-1)
CheckReport verify_cj_product(unsigned n, Perturb perturb = Perturb::none);

/// num/den; equality by cross-multiplication.
struct RationalFn {
  UPoly num, den;

  /// f(g(y)) for a polynomial substitution g.
  RationalFn compose(const UPoly& g) const;
  /// f(1/y), cleared of negative powers.
  RationalFn reciprocal() const;
  /// Value at a point of any field containing the coefficient field.
  FieldElem eval(const FieldElem& y) const;

  friend bool operator==(const RationalFn& a, const RationalFn& b) { return a.num * b.den == b.num * a.den; }
};

/// e(y,c,j) = (c y^2 + y + j/c)^(q+1) / (y^q + y)^2 over GF(2^n); c != 0, Tr(j) = 1.
RationalFn e_rational(unsigned n, const FieldElem& c, const FieldElem& j);

/// For all b, c in F_q^x and j in F_{q,1}: e(y+b,c,j) = e(y,c,j+bc+(bc)^2),
/// e(by,c,j) = e(y,bc,j), e(1/y,c,j) = e(y,j/c,j), and Tr(j+bc+(bc)^2) = 1.
CheckReport verify_e_transformations(unsigned n, Perturb perturb = Perturb::none);

/// prod_{c,j} (X - e(y,c,j)) = C(X) + a over the frame's ambient field, together with
/// C(e) = a and distinctness of the (q/2)(q-1) values.
CheckReport verify_root_product(const SplitFrame& f, Perturb perturb = Perturb::none);

}  // namespace mcm
