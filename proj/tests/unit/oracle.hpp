#pragma once

// Slow reference arithmetic for cross-checking the library. Nothing here calls into mcm.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Bit-serial multiplication modulo `mod` (degree m, leading bit included).
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, unsigned m, unsigned __int128 mod) {
  unsigned __int128 acc = 0, x = a;
  for (unsigned i = 0; i < m; ++i) {
    if ((b >> i) & 1) acc ^= x;
    x <<= 1;
    if ((x >> m) & 1) x ^= mod;
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, unsigned m, unsigned __int128 mod) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a, m, mod);
    a = mul(a, a, m, mod);
    e >>= 1;
  }
  return r;
}

inline int trace(std::uint64_t a, unsigned m, unsigned __int128 mod) {
  std::uint64_t s = 0, t = a;
  for (unsigned i = 0; i < m; ++i) {
    s ^= t;
    t = mul(t, t, m, mod);
  }
  return static_cast<int>(s);
}

// GF(2)[x] as bit masks, degree < 64.
inline int deg2(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

inline std::uint64_t mod2(std::uint64_t a, std::uint64_t b) {
  const int db = deg2(b);
  for (int d = deg2(a); d >= db; d = deg2(a)) a ^= b << (d - db);
  return a;
}

inline bool irreducible2(std::uint64_t p) {
  const int d = deg2(p);
  if (d < 1) return false;
  for (std::uint64_t g = 2; deg2(g) <= d / 2; ++g) {
    if (mod2(p, g) == 0) return false;
  }
  return true;
}

// Degrees of the irreducible factors of p over GF(2), by trial division, ascending.
inline std::vector<unsigned> factor_degrees2(std::uint64_t p) {
  std::vector<unsigned> out;
  for (std::uint64_t g = 2; deg2(p) > 0;) {
    if (deg2(g) > deg2(p) / 2) {
      out.push_back(static_cast<unsigned>(deg2(p)));
      break;
    }
    if (irreducible2(g) && mod2(p, g) == 0) {
      out.push_back(static_cast<unsigned>(deg2(g)));
      std::uint64_t q = 0, r = p;
      const int dg = deg2(g);
      for (int d = deg2(r); d >= dg; d = deg2(r)) {
        q |= std::uint64_t{1} << (d - dg);
        r ^= g << (d - dg);
      }
      p = q;
    } else {
      ++g;
    }
  }
  return out;
}

// Horner evaluation of a coefficient vector (lowest first) in GF(2^m).
inline std::uint64_t eval(const std::vector<std::uint64_t>& c, std::uint64_t x, unsigned m, unsigned __int128 mod) {
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mul(acc, x, m, mod) ^ *it;
  return acc;
}

// C(x) = x T(x)^(q+1) computed directly from T, q = 2^n.
inline std::uint64_t c_value(unsigned n, std::uint64_t x, unsigned m, unsigned __int128 mod) {
  std::uint64_t t = 0;
  for (unsigned i = 0; i < n; ++i) t ^= pow(x, (std::uint64_t{1} << i) - 1, m, mod);
  return mul(x, pow(t, (std::uint64_t{1} << n) + 1, m, mod), m, mod);
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::uint64_t bits(unsigned m) { return m >= 64 ? rng() : rng() & ((std::uint64_t{1} << m) - 1); }
  std::uint64_t nonzero(unsigned m) {
    for (;;) {
      if (auto v = bits(m)) return v;
    }
  }
  unsigned below(unsigned hi) { return static_cast<unsigned>(rng() % hi); }
};

}  // namespace oracle
