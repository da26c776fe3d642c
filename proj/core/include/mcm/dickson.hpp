#pragma once

// Dickson polynomials in characteristic 2 and the Mueller-Cohen-Matthews polynomial
// C(x) = x T(x)^(q+1), T(x) = sum_{i<n} x^(2^i - 1), q = 2^n.

#include <cstdint>

#include "mcm/poly.hpp"
#include "mcm/report.hpp"

namespace mcm {

/// D_k by D_0 = 0, D_1 = x, D_k = x D_{k-1} + D_{k-2}, built over GF(2) and lifted into ctx.
UPoly dickson_poly(unsigned k, const FieldContext& ctx);

/// sum_{i=1}^n Y^(q - 2^i + 1)
UPoly dickson_qm1_closed(unsigned n, const FieldContext& ctx);
/// Y^(q+1) + D_{q-1}(Y)
UPoly dickson_qp1_closed(unsigned n, const FieldContext& ctx);

// n >= 2 for all three.
UPoly t_poly(unsigned n, const FieldContext& ctx);
UPoly t_rev_poly(unsigned n, const FieldContext& ctx);
UPoly c_poly(unsigned n, const FieldContext& ctx);

/// C(x) through x T(x) = x + x^2 + ... + x^(2^(n-1)), without expanding C.
FieldElem c_eval(unsigned n, const FieldElem& x);

/// Recurrence against closed forms for D_{q-1} and D_{q+1}.
CheckReport verify_closed_forms(unsigned n, Perturb perturb = Perturb::none);

/// Product rule D_k D_l = D_{k+l} + D_{k-l} and Frobenius rule D_{2k} = D_k^2 for
/// l <= k <= 2q, plus D_k(<u>) = <u^k> at `trials` random nonzero u in GF(2^(2n)).
CheckReport verify_dickson_relations(unsigned n, unsigned trials, std::uint64_t seed,
                                     Perturb perturb = Perturb::none);

}  // namespace mcm
