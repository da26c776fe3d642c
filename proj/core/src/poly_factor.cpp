// Squarefree -> distinct-degree -> equal-degree factorization over GF(2^m).
//
// Equal-degree splitting uses the additive trace map T(h) = h + h^2 + ... + h^(2^(md-1))
// modulo the input: on each degree-d irreducible factor it lands in GF(2), so
// gcd(f, T(h)) separates factors whenever T(h) is not constant across them.

#include <algorithm>
#include <random>

#include "mcm/poly.hpp"

namespace mcm {
namespace {

bool coeff_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ra = a.raw(), rb = b.raw();
  return std::lexicographical_compare(ra.rbegin(), ra.rend(), rb.rbegin(), rb.rend());
}

// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
std::vector<std::pair<UPoly, unsigned>> squarefree(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  UPoly c = gcd(f, f.derivative());
  UPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, mult] : squarefree(c.sqrt_coeffs().monic())) out.emplace_back(std::move(g), 2 * mult);
  }
  return out;
}

UPoly trace_map(const UPoly& h, std::uint64_t bits, const UPoly& mod) {
  UPoly acc(mod.field());
  UPoly t = h % mod;
  for (std::uint64_t i = 0; i < bits; ++i) {
    acc += t;
    t = mulmod(t, t, mod);
  }
  return acc;
}

void equal_degree(const UPoly& f, unsigned d, std::mt19937_64& rng, std::vector<UPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const auto& F = f.field();
  const std::uint64_t bits = static_cast<std::uint64_t>(F.degree()) * d;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& v : c) v = rng() & F.mask();
    UPoly h(F, std::move(c));
    if (h.degree() <= 0) continue;
    UPoly g = gcd(f, trace_map(h, bits, f));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree((f / g).monic(), d, rng, out);
      return;
    }
  }
  throw InternalError("equal-degree splitting did not converge");
}

}  // namespace

std::vector<std::pair<UPoly, unsigned>> distinct_degree_factor(const UPoly& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  const auto& F = f.field();
  UPoly g = f.monic();
  const UPoly x = UPoly::x(F);
  UPoly h = x % g;
  for (unsigned d = 1; g.degree() >= 2 * static_cast<int>(d); ++d) {
    h = frobenius_mod(h, F.degree(), g);
    UPoly piece = gcd(g, h - x);
    if (piece.degree() > 0) {
      out.emplace_back(piece, d);
      g = g / piece;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
  return out;
}

bool is_irreducible(const UPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const auto& F = f.field();
  const UPoly g = f.monic();
  const UPoly x = UPoly::x(F);
  const auto d = static_cast<std::uint64_t>(g.degree());
  // x^(Q^d) = x mod g, and gcd(x^(Q^(d/p)) - x, g) = 1 for each prime p | d, Q = 2^m.
  if (frobenius_mod(x, F.degree() * d, g) != x % g) return false;
  for (auto p : prime_factors(d)) {
    const UPoly t = frobenius_mod(x, F.degree() * (d / p), g);
    if (gcd(g, t - x).degree() != 0) return false;
  }
  return true;
}

std::vector<Factor> factor(const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<Factor> out;
  for (const auto& [part, mult] : squarefree(f.monic())) {
    for (const auto& [piece, d] : distinct_degree_factor(part)) {
      std::vector<UPoly> irr;
      equal_degree(piece, d, rng, irr);
      for (auto& g : irr) out.push_back({std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return coeff_less(a.poly, b.poly);
  });
  // Equal factors can arrive from different squarefree layers only in pathological
  // inputs; merge them so multiplicities are exact.
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }

  UPoly check = UPoly::constant(f.leading());
  for (const auto& fac : merged) {
    if (!is_irreducible(fac.poly)) throw InternalError("factor failed the irreducibility certificate");
    check *= fac.poly.pow(fac.multiplicity);
  }
  if (check != f) throw InternalError("factors do not multiply back to the input");
  return merged;
}

FactType fact_type(const UPoly& f, std::uint64_t seed) {
  FactType t;
  for (const auto& fac : factor(f, seed)) {
    for (unsigned i = 0; i < fac.multiplicity; ++i) t.parts.push_back(static_cast<unsigned>(fac.poly.degree()));
  }
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

unsigned splitting_degree(const UPoly& f, std::uint64_t seed) {
  std::uint64_t l = 1;
  for (const auto& fac : factor(f, seed)) l = lcm_u64(l, static_cast<std::uint64_t>(fac.poly.degree()));
  return static_cast<unsigned>(l);
}

std::vector<FieldElem> roots_in_field(const UPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has every element as a root");
  const auto& F = f.field();
  std::vector<FieldElem> roots;
  if (f.degree() <= 0) return roots;
  const UPoly g = f.monic();
  const UPoly x = UPoly::x(F);
  UPoly lin = gcd(g, frobenius_mod(x, F.degree(), g) - x);
  if (lin.degree() <= 0) return roots;
  std::mt19937_64 rng(seed);
  std::vector<UPoly> parts;
  equal_degree(lin, 1, rng, parts);
  for (const auto& p : parts) roots.push_back(p.coeff(0));
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    if (!f(r).is_zero()) throw InternalError("computed root does not annihilate the polynomial");
  }
  return roots;
}

SplitRoots roots_in_splitting_field(const UPoly& f, std::uint64_t seed) {
  if (f.degree() < 1) throw std::invalid_argument("roots_in_splitting_field needs positive degree");
  if (gcd(f, f.derivative()).degree() != 0) throw std::invalid_argument("roots_in_splitting_field needs a squarefree input");
  const unsigned s = splitting_degree(f, seed);
  const unsigned deg = f.field().degree() * s;
  if (deg > 64) throw std::invalid_argument("splitting field GF(2^" + std::to_string(deg) + ") exceeds 64 bits");
  const auto& ambient = FieldContext::make(deg);
  const UPoly lifted = f.lift(ambient);
  auto roots = roots_in_field(lifted, seed);
  if (roots.size() != static_cast<std::size_t>(f.degree())) {
    throw InternalError("polynomial did not split in its splitting field");
  }
  return {&ambient, std::move(roots)};
}

}  // namespace mcm
