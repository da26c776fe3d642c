#pragma once

// The joint splitting scene of x^(q+1) + a x + a and C(x) + a over GF(2^k).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcm/dickson.hpp"
#include "mcm/pgl2.hpp"
#include "mcm/poly.hpp"
#include "mcm/report.hpp"

namespace mcm {

/// x^(q+1) + b x + c over the field of b and c.
UPoly qp1_poly(unsigned n, const FieldElem& b, const FieldElem& c);

struct SplitFrame {
  unsigned n = 0, k = 0;
  const FieldContext* base = nullptr;     // GF(2^k)
  const FieldContext* fq = nullptr;       // GF(2^n)
  const FieldContext* ambient = nullptr;  // contains both and every root
  FieldElem a;                            // in base
  FieldElem a_up;                         // a in ambient
  std::vector<FieldElem> roots;           // ascending
  FieldElem r, r0, r1;                    // the three smallest roots
  FieldElem y, z, xi;
  std::vector<ProjPoint> points;          // projective_line(*fq)
  std::vector<FieldElem> by_point;        // r_w in the order of `points`

  std::uint64_t q() const { return 1ULL << n; }
  const FieldElem& root_at(const ProjPoint& w) const;
  const Embedding& fq_embedding() const { return Embedding::get(*fq, *ambient); }
  /// Image in the ambient field of an element of GF(2^k) or GF(2^n).
  FieldElem up(const FieldElem& x) const;
};

/// Splits x^(q+1) + a x + a and materializes r_w = r (y + w)^(q-1), r_inf = r. Every
/// relation between r, y, z, xi is asserted; a failure throws InternalError.
/// Throws std::invalid_argument for a = 0, n < 2, or an ambient field beyond 64 bits.
SplitFrame build_frame(unsigned n, const FieldElem& a, std::uint64_t seed);

/// e(y', c, j) = (c y'^2 + y' + j/c)^(q+1) / (y'^q + y')^2 for y' in the ambient field;
/// c, j in GF(2^n). Throws std::domain_error when y' lies in GF(q).
FieldElem e_at(const SplitFrame& f, const FieldElem& yv, const FieldElem& c, const FieldElem& j);
/// e(y, c, j); requires c != 0 and Tr(j) = 1.
FieldElem e_root(const SplitFrame& f, const FieldElem& c, const FieldElem& j);

struct RootEntry {
  FieldElem c, j, e;
};
/// The (q/2)(q-1) roots e(y,c,j), c ascending then j ascending.
std::vector<RootEntry> root_table(const SplitFrame& f);

/// Recovery of a from xi, recovery of every w in F_q from the roots, and injectivity of
/// (c,j) -> e(y,c,j) onto the roots of C(x) + a.
CheckReport verify_frame(const SplitFrame& f, Perturb perturb = Perturb::none);

/// Human-readable listing of the frame (roots, y, z, xi, the (c,j) table).
std::string dump_frame(const SplitFrame& f);

struct SevenWitness {
  const FieldContext* field = nullptr;  // frame ambient, or a quadratic extension of it
  FieldElem e, lambda, u, nu, zeta, rho;
  FieldElem c, d;                       // in GF(2^n)
  FieldElem r, r0, r1, y;               // frame values in `field`
};

/// Builds u with 1/e = <u^(q+1)> and r^2 = lambda <u>^(q-1), then zeta, rho in mu_{q+1}
/// aligned with r0^2, r1^2. e must be a root of C(x) + a in the frame's ambient field.
SevenWitness seven_witness(const SplitFrame& f, const FieldElem& e, std::uint64_t seed);

/// The seven relations tying y, u, zeta, rho, c, d and e together, plus e = e(y, c, d^2) and d in F_{q,1}.
CheckReport verify_seven_formulas(const SplitFrame& f, const SevenWitness& w, Perturb perturb = Perturb::none);

/// {lambda <zeta u>^(q-1) : zeta in mu_{q+1}} is the root set {r_w^2} of x^(q+1) + a^2 x + a^2.
CheckReport verify_eRelation(const SplitFrame& f, const SevenWitness& w);

/// Witness and both checks for every root of C(x) + a.
CheckReport verify_seven(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb = Perturb::none);

/// Splitting degrees over GF(2^k) of x^(q+1) + b x + b for b = a, a^2, a^4, of
/// x^(q+1) + x + 1/a, and of C(x) + a must all agree.
CheckReport splitfield_equal(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb = Perturb::none);
CheckReport verify_splitfield(unsigned n, unsigned k, std::uint64_t seed, Perturb perturb = Perturb::none);

struct Correspondence {
  FactType f;                  // x^(q+1) + x + 1/a
  FactType c;                  // C(x) + a
  std::optional<int> case_id;  // 1..4, only when n | k
  std::optional<unsigned> delta;
};

Correspondence correspond(unsigned n, const FieldElem& a, std::uint64_t seed);

/// Checks the shapes of the four cases for one a (n | k) and reports the raw pair otherwise.
CheckReport verify_correspond(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb = Perturb::none);
/// verify_correspond for every nonzero a in GF(2^k).
CheckReport verify_correspond_all(unsigned n, unsigned k, std::uint64_t seed, Perturb perturb = Perturb::none);

/// q = 4: every a in GF(2^k)^x pairs the factorization types of x^5 + x + 1/a and
/// x(1+x)^5 + a as in the fixed table for the parity of k.
CheckReport quintic_table(unsigned k, std::uint64_t seed, Perturb perturb = Perturb::none);

struct RootCounts {
  std::uint64_t c0 = 0, c1 = 0, chalf = 0, ctop = 0;
  /// Any other root count observed, keyed by the count.
  std::map<std::uint64_t, std::uint64_t> other;
  friend bool operator==(const RootCounts&, const RootCounts&) = default;
  std::string str() const;
};

/// For F = GF(q^m), tallies how many a in F^x give C(x) + a exactly 0, 1, q/2,
/// (q/2)(q-1) roots in F. Needs n*m <= 20.
RootCounts root_count_distribution(unsigned n, unsigned m);
RootCounts expected_root_counts(unsigned n, unsigned m);
CheckReport verify_root_counts(unsigned n, unsigned m, Perturb perturb = Perturb::none);

struct PermResult {
  bool is_permutation = false;
  bool predicted = false;  // gcd(2m, n) = 1
};
/// Exhaustive evaluation of C on GF(2^m), m <= 24.
PermResult perm_check(unsigned n, unsigned m);
CheckReport verify_perm(unsigned n, unsigned m, Perturb perturb = Perturb::none);

/// Frobenius x -> x^(2^k) on the roots of x^(q+1) + x + 1/a and of C(x) + a in their common
/// splitting field (n | k), checked against the four orbit shapes; also locates the
/// unique gamma with sigma(y) = gamma^-1 y and checks sigma(r_w) = r_gamma(w).
CheckReport orbit_structure(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb = Perturb::none);
CheckReport verify_orbit_structure(unsigned n, unsigned k, std::uint64_t seed, Perturb perturb = Perturb::none);

}  // namespace mcm
