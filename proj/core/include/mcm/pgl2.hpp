#pragma once

// PGL2(F_q), q = 2^n, acting on the projective line by linear fractional maps.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mcm/gf2.hpp"
#include "mcm/report.hpp"

namespace mcm {

class ProjPoint {
 public:
  static ProjPoint infinity() { return ProjPoint(); }
  static ProjPoint finite(const FieldElem& w) { return ProjPoint(w); }

  bool is_infinity() const noexcept { return inf_; }
  /// Throws std::logic_error at infinity.
  const FieldElem& value() const;

  std::string str() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  /// Infinity first, then by encoding.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) noexcept {
    if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.w_ <=> b.w_;
  }

 private:
  ProjPoint() = default;
  explicit ProjPoint(const FieldElem& w) : inf_(false), w_(w) {}

  bool inf_ = true;
  FieldElem w_;
};

/// Infinity followed by F_q in encoding order.
std::vector<ProjPoint> projective_line(const FieldContext& fq);

class PGL2Elem {
 public:
  /// Class of [[A,B],[C,D]]; throws std::domain_error when AD + BC = 0.
  PGL2Elem(FieldElem A, FieldElem B, FieldElem C, FieldElem D);
  static PGL2Elem identity(const FieldContext& fq);

  const FieldElem& A() const noexcept { return a_; }
  const FieldElem& B() const noexcept { return b_; }
  const FieldElem& C() const noexcept { return c_; }
  const FieldElem& D() const noexcept { return d_; }
  const FieldContext& field() const { return a_.field(); }

  FieldElem det() const { return a_ * d_ + b_ * c_; }
  bool is_identity() const noexcept;
  PGL2Elem inverse() const;
  ProjPoint act(const ProjPoint& w) const;
  /// (Ay+B)/(Cy+D) for y in a field containing F_q, entries mapped through `emb`.
  /// Throws std::domain_error when Cy+D = 0.
  FieldElem act(const Embedding& emb, const FieldElem& y) const;

  std::string str() const;

  friend PGL2Elem operator*(const PGL2Elem& g, const PGL2Elem& h);
  friend bool operator==(const PGL2Elem&, const PGL2Elem&) = default;
  friend std::strong_ordering operator<=>(const PGL2Elem& g, const PGL2Elem& h) noexcept {
    if (auto c = g.a_ <=> h.a_; c != 0) return c;
    if (auto c = g.b_ <=> h.b_; c != 0) return c;
    if (auto c = g.c_ <=> h.c_; c != 0) return c;
    return g.d_ <=> h.d_;
  }

 private:
  FieldElem a_, b_, c_, d_;
};

/// All q^3 - q canonical elements in ascending order.
std::vector<PGL2Elem> all_elements(const FieldContext& fq);

unsigned order(const PGL2Elem& g);

enum class PGLClass { identity, involution, splits_qm1, splits_qp1 };
std::string to_string(PGLClass c);

/// Trace criterion: involution iff A = D (and g is not the identity); otherwise the order
/// divides q+1 iff Tr(det / (A+D)^2) = 1, else it divides q-1.
PGLClass classify(const PGL2Elem& g);

struct ClassCounts {
  std::uint64_t identity = 0, involution = 0, splits_qm1 = 0, splits_qp1 = 0;
  std::uint64_t total() const { return identity + involution + splits_qm1 + splits_qp1; }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Exhaustive tally over PGL2(2^n).
ClassCounts class_counts(unsigned n);
/// (1, q^2-1, (q+1)(q/2)(q-2), q^2(q-1)/2)
ClassCounts expected_class_counts(unsigned n);
/// Enumerated tally against the closed forms, plus classify against order elementwise.
CheckReport verify_class_counts(unsigned n, Perturb perturb = Perturb::none);

/// M_A = [[A, 1/C], [C, A + 1/j]], M_inf = identity.
PGL2Elem cyclic_ma(const FieldElem& j, const FieldElem& C, const ProjPoint& A);
/// C_{j,C} = {M_A : A in P^1(q)}, indexed like projective_line.
std::vector<PGL2Elem> cyclic_group(const FieldElem& j, const FieldElem& C);
/// D_{j,C} = C_{j,C} together with M_A [[1, 1/(jC)], [0, 1]], sorted.
std::vector<PGL2Elem> dihedral_group(const FieldElem& j, const FieldElem& C);

/// Closure law M_A M_B = M_K, cyclic structure of order q+1, the reflection relation,
/// the dihedral group order, and absence of fixed points for nontrivial M_A.
CheckReport verify_dihedral(const FieldElem& j, const FieldElem& C, Perturb perturb = Perturb::none);

/// Conjugation of M_A by [[1,b],[0,1]] and by diag(C,1), unique decomposition gamma = delta beta
/// with delta in C_j and beta fixing infinity, and conjugacy of all order-(q+1) cyclic
/// subgroups (a conjugating element is found by scan).
CheckReport verify_conjugation(unsigned n, Perturb perturb = Perturb::none);

/// verify_dihedral for every j in F_{q,1} and C in {1, generator}, plus verify_conjugation.
CheckReport verify_dihedral_all(unsigned n, Perturb perturb = Perturb::none);

}  // namespace mcm
