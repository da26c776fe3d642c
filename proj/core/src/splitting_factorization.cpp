#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcm/parallel.hpp"
#include "mcm/splitting.hpp"

namespace mcm {
namespace {

UPoly c_plus(unsigned n, const FieldElem& a) { return c_poly(n, a.field()) + UPoly::constant(a); }

UPoly f_plus_inv(unsigned n, const FieldElem& a) { return qp1_poly(n, a.field().one(), a.inv()); }

std::vector<FieldElem> nonzero(const FieldContext& F) {
  auto els = F.elements();
  els.erase(els.begin());
  return els;
}

FactType repeat(std::initializer_list<std::pair<unsigned, std::uint64_t>> parts) {
  FactType t;
  for (auto [d, count] : parts) t.parts.insert(t.parts.end(), count, d);
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

struct CaseResult {
  int id = 0;
  unsigned delta = 1;
  std::optional<std::string> error;
};

// The four shapes for x^(q+1)+x+1/a (f) and C(x)+a (c) when GF(q) lies in the base field.
CaseResult classify_case(unsigned n, const FactType& f, const FactType& c, Perturb perturb) {
  const std::uint64_t q = 1ULL << n, top = (q / 2) * (q - 1);
  CaseResult res;
  const auto ones = f.count(1);
  FactType want_f, want_c;
  if (ones >= 3) {
    res.id = 1;
    want_f = repeat({{1, q + 1}});
    want_c = repeat({{1, top}});
  } else if (ones == 2) {
    res.id = 2;
    res.delta = f.parts.back();
    if ((q - 1) % res.delta != 0) res.error = "delta " + std::to_string(res.delta) + " does not divide q-1";
    want_f = repeat({{1, 2}, {res.delta, (q - 1) / res.delta}});
    want_c = repeat({{res.delta, top / res.delta}});
  } else if (ones == 1) {
    res.id = 3;
    res.delta = 2;
    want_f = repeat({{1, 1}, {2, q / 2}});
    want_c = repeat({{1, q / 2}, {2, (q * q - 2 * q) / 4}});
  } else {
    res.id = 4;
    res.delta = f.parts.front();
    if ((q + 1) % res.delta != 0) res.error = "delta " + std::to_string(res.delta) + " does not divide q+1";
    want_f = repeat({{res.delta, (q + 1) / res.delta}});
    want_c = repeat({{1, 1}, {res.delta, (top - 1) / res.delta}});
  }
  if (perturb == Perturb::rhs) want_c.parts.push_back(1);
  if (!res.error && (f != want_f || c != want_c)) {
    res.error = "case " + std::to_string(res.id) + " expects " + want_f.str() + " / " + want_c.str() + ", got " +
                f.str() + " / " + c.str();
  }
  return res;
}

void check_n(unsigned n) {
  if (n < 2 || n > 16) throw std::invalid_argument("n must be in [2, 16]");
}

// Folds per-a reports into one, keeping the first failure in a-order.
void fold(CheckReport& rep, const std::vector<CheckReport>& parts) {
  std::size_t ok = 0;
  for (const auto& p : parts) {
    if (p.pass) ++ok;
    else rep.fail(*p.counterexample);
  }
  rep.detail("values_passed", std::to_string(ok) + "/" + std::to_string(parts.size()));
}

}  // namespace

CheckReport splitfield_equal(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb) {
  check_n(n);
  if (a.is_zero()) throw std::invalid_argument("splitfield_equal: a must be nonzero");
  CheckReport rep("splitfield");
  rep.param("n", std::to_string(n)).param("k", std::to_string(a.field().degree())).param("a", to_hex(a));
  ReportTimer timer(rep);
  const UPoly ca = c_plus(n, a);
  if (gcd(ca, ca.derivative()).degree() != 0) rep.fail("C(x)+a is not squarefree at a=" + to_hex(a));
  const std::vector<std::pair<std::string, UPoly>> polys{
      {"x^(q+1)+ax+a", qp1_poly(n, a, a)},
      {"x^(q+1)+a^2x+a^2", qp1_poly(n, a.square(), a.square())},
      {"x^(q+1)+a^4x+a^4", qp1_poly(n, a.pow(4), a.pow(4))},
      {"x^(q+1)+x+1/a", f_plus_inv(n, a)},
      {"C(x)+a", ca},
  };
  std::vector<unsigned> degs;
  std::string listing;
  for (const auto& [name, p] : polys) {
    degs.push_back(splitting_degree(p, seed));
    listing += (listing.empty() ? "" : " ") + std::to_string(degs.back());
  }
  if (perturb == Perturb::rhs) ++degs.back();
  rep.detail("degrees", listing);
  for (std::size_t i = 1; i < degs.size(); ++i) {
    if (degs[i] != degs[0]) {
      rep.fail("splitting degree of " + polys[i].first + " is " + std::to_string(degs[i]) + ", not " +
               std::to_string(degs[0]) + " at a=" + to_hex(a));
      break;
    }
  }
  return rep;
}

CheckReport verify_splitfield(unsigned n, unsigned k, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("splitfield");
  rep.param("n", std::to_string(n)).param("k", std::to_string(k));
  ReportTimer timer(rep);
  const auto as = nonzero(FieldContext::make(k));
  std::vector<CheckReport> parts(as.size());
  parallel_for(as.size(), [&](std::size_t i) { parts[i] = splitfield_equal(n, as[i], seed, perturb); });
  fold(rep, parts);
  return rep;
}

Correspondence correspond(unsigned n, const FieldElem& a, std::uint64_t seed) {
  check_n(n);
  if (a.is_zero()) throw std::invalid_argument("correspond: a must be nonzero");
  Correspondence out;
  out.f = fact_type(f_plus_inv(n, a), seed);
  out.c = fact_type(c_plus(n, a), seed);
  if (a.field().degree() % n == 0) {
    const auto cr = classify_case(n, out.f, out.c, Perturb::none);
    out.case_id = cr.id;
    out.delta = cr.delta;
  }
  return out;
}

CheckReport verify_correspond(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("correspond");
  const unsigned k = a.field().degree();
  rep.param("n", std::to_string(n)).param("k", std::to_string(k)).param("a", to_hex(a));
  ReportTimer timer(rep);
  const Correspondence c = correspond(n, a, seed);
  rep.detail("f_type", c.f.str()).detail("c_type", c.c.str());
  if (k % n != 0) {
    rep.detail("claim", "none (GF(q) not in base field)");
    return rep;
  }
  const auto cr = classify_case(n, c.f, c.c, perturb);
  rep.detail("case", std::to_string(cr.id)).detail("delta", std::to_string(cr.delta));
  if (cr.error) rep.fail(*cr.error + " at a=" + to_hex(a));
  return rep;
}

CheckReport verify_correspond_all(unsigned n, unsigned k, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("correspond");
  rep.param("n", std::to_string(n)).param("k", std::to_string(k));
  ReportTimer timer(rep);
  const auto as = nonzero(FieldContext::make(k));
  std::vector<CheckReport> parts(as.size());
  parallel_for(as.size(), [&](std::size_t i) { parts[i] = verify_correspond(n, as[i], seed, perturb); });
  fold(rep, parts);
  std::map<std::string, std::size_t> tally;
  for (const auto& p : parts) {
    std::string key;
    for (const auto& [name, v] : p.details) {
      if (name == "f_type") key = v;
      if (name == "c_type") key += "/" + v;
    }
    ++tally[key];
  }
  for (const auto& [key, cnt] : tally) rep.detail("pair " + key, std::to_string(cnt));
  return rep;
}

CheckReport quintic_table(unsigned k, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("quintic");
  rep.param("k", std::to_string(k));
  ReportTimer timer(rep);
  if (k < 1 || k > 24) throw std::invalid_argument("quintic_table: k must be in [1, 24]");
  using Row = std::pair<std::string, std::string>;
  const std::vector<Row> even{{"[1,1,1,1,1]", "[1,1,1,1,1,1]"}, {"[1,1,3]", "[3,3]"}, {"[1,2,2]", "[1,1,2,2]"}, {"[5]", "[1,5]"}};
  const std::vector<Row> odd{{"[1,1,1,2]", "[2,2,2]"}, {"[1,4]", "[1,1,4]"}, {"[2,3]", "[6]"}};
  const auto& rows = k % 2 == 0 ? even : odd;
  const auto as = nonzero(FieldContext::make(k));
  std::vector<std::pair<FactType, FactType>> types(as.size());
  parallel_for(as.size(), [&](std::size_t i) {
    types[i] = {fact_type(f_plus_inv(2, as[i]), seed), fact_type(c_plus(2, as[i]), seed)};
  });
  std::map<std::string, std::size_t> tally;
  for (std::size_t i = 0; i < as.size(); ++i) {
    const auto& [ft, ct] = types[i];
    auto row = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.first == ft.str(); });
    std::string want = row == rows.end() ? "" : row->second;
    if (perturb == Perturb::rhs) want += "*";
    if (row == rows.end()) rep.fail("unlisted type " + ft.str() + " at a=" + to_hex(as[i]));
    else if (ct.str() != want) rep.fail(ft.str() + " paired with " + ct.str() + " instead of " + want + " at a=" + to_hex(as[i]));
    ++tally[ft.str() + "/" + ct.str()];
  }
  for (const auto& [key, cnt] : tally) rep.detail("pair " + key, std::to_string(cnt));
  return rep;
}

std::string RootCounts::str() const {
  std::ostringstream os;
  os << '(' << c0 << ',' << c1 << ',' << chalf << ',' << ctop << ')';
  for (const auto& [cnt, num] : other) os << " +" << num << "x" << cnt;
  return os.str();
}

RootCounts root_count_distribution(unsigned n, unsigned m) {
  check_n(n);
  if (m < 1 || n * m > 20) throw std::invalid_argument("root_count_distribution needs n*m <= 20");
  const auto& F = FieldContext::make(n * m);
  const std::uint64_t size = F.mask() + 1;
  std::vector<std::uint32_t> hits(size, 0);
  for (std::uint64_t x = 0; x < size; ++x) ++hits[c_eval(n, F.elem(x)).bits()];
  const std::uint64_t q = 1ULL << n;
  RootCounts rc;
  for (std::uint64_t a = 1; a < size; ++a) {
    const std::uint64_t h = hits[a];
    if (h == 0) ++rc.c0;
    else if (h == 1) ++rc.c1;
    else if (h == q / 2) ++rc.chalf;
    else if (h == (q / 2) * (q - 1)) ++rc.ctop;
    else ++rc.other[h];
  }
  return rc;
}

RootCounts expected_root_counts(unsigned n, unsigned m) {
  const std::uint64_t q = 1ULL << n;
  std::uint64_t qm = 1;
  for (unsigned i = 0; i < m; ++i) qm *= q;
  const std::uint64_t qm1 = qm / q;
  RootCounts rc;
  rc.c0 = (q - 2) * (qm - 1) / (2 * (q - 1));
  if (m % 2 == 0) {
    rc.c1 = (qm * q - q) / (2 * (q + 1));
    rc.chalf = qm1;
    rc.ctop = (qm1 - q) / (q * q - 1);
  } else {
    rc.c1 = (qm * q + q) / (2 * (q + 1));
    rc.chalf = qm1 - 1;
    rc.ctop = (qm1 - 1) / (q * q - 1);
  }
  return rc;
}

CheckReport verify_root_counts(unsigned n, unsigned m, Perturb perturb) {
  CheckReport rep("counts");
  rep.param("n", std::to_string(n)).param("m", std::to_string(m));
  ReportTimer timer(rep);
  const RootCounts got = root_count_distribution(n, m);
  RootCounts want = expected_root_counts(n, m);
  if (perturb == Perturb::rhs) ++want.c0;
  rep.detail("observed", got.str()).detail("expected", want.str());
  if (got != want) rep.fail("observed " + got.str() + " but expected " + want.str());
  return rep;
}

PermResult perm_check(unsigned n, unsigned m) {
  check_n(n);
  if (m < 1 || m > 24) throw std::invalid_argument("perm_check needs 1 <= m <= 24");
  const auto& F = FieldContext::make(m);
  const std::uint64_t size = F.mask() + 1;
  std::vector<bool> seen(size, false);
  PermResult res;
  res.is_permutation = true;
  for (std::uint64_t x = 0; x < size; ++x) {
    const std::uint64_t v = c_eval(n, F.elem(x)).bits();
    if (seen[v]) {
      res.is_permutation = false;
      break;
    }
    seen[v] = true;
  }
  res.predicted = std::gcd(2 * m, n) == 1;
  return res;
}

CheckReport verify_perm(unsigned n, unsigned m, Perturb perturb) {
  CheckReport rep("permcheck");
  rep.param("n", std::to_string(n)).param("m", std::to_string(m));
  ReportTimer timer(rep);
  const PermResult r = perm_check(n, m);
  const bool predicted = perturb == Perturb::rhs ? !r.predicted : r.predicted;
  rep.detail("permutation", r.is_permutation ? "yes" : "no").detail("gcd(2m,n)", std::to_string(std::gcd(2 * m, n)));
  if (r.is_permutation != predicted) {
    rep.fail(std::string("C is ") + (r.is_permutation ? "" : "not ") + "a permutation of GF(2^" + std::to_string(m) +
             ") but gcd(2m,n) = " + std::to_string(std::gcd(2 * m, n)));
  }
  return rep;
}

CheckReport orbit_structure(unsigned n, const FieldElem& a, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("orbit-structure");
  const unsigned k = a.field().degree();
  rep.param("n", std::to_string(n)).param("k", std::to_string(k)).param("a", to_hex(a));
  ReportTimer timer(rep);
  if (k % n != 0) throw std::invalid_argument("orbit_structure needs n | k");
  const SplitFrame f = build_frame(n, a, seed);
  const std::uint64_t q = f.q();
  const auto& A = *f.ambient;

  auto orbit_type = [&](const std::vector<FieldElem>& roots) {
    FactType t;
    std::vector<bool> done(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (done[i]) continue;
      unsigned len = 0;
      std::size_t cur = i;
      while (!done[cur]) {
        done[cur] = true;
        ++len;
        const FieldElem img = roots[cur].frobenius(k);
        cur = static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), img) - roots.begin());
        if (cur == roots.size() || roots[cur] != img) throw InternalError("Frobenius image is not a root");
      }
      t.parts.push_back(len);
    }
    std::sort(t.parts.begin(), t.parts.end());
    return t;
  };
  const auto froots = roots_in_field(f_plus_inv(n, a).lift(A), seed);
  const auto croots = roots_in_field(c_plus(n, a).lift(A), seed);
  if (froots.size() != q + 1 || croots.size() != (q / 2) * (q - 1)) {
    rep.fail("the two polynomials do not split in a common field at a=" + to_hex(a));
    return rep;
  }
  const FactType fo = orbit_type(froots), co = orbit_type(croots);
  rep.detail("f_orbits", fo.str()).detail("c_orbits", co.str());
  const auto cr = classify_case(n, fo, co, perturb);
  rep.detail("case", std::to_string(cr.id));
  if (cr.error) rep.fail(*cr.error + " at a=" + to_hex(a));

  const Correspondence corr = correspond(n, a, seed);
  if (corr.f != fo || corr.c != co) rep.fail("orbit sizes disagree with factorization degrees at a=" + to_hex(a));

  const auto& emb = f.fq_embedding();
  const FieldElem sy = f.y.frobenius(k);
  std::vector<PGL2Elem> gammas;
  for (const auto& g : all_elements(*f.fq)) {
    if (g.inverse().act(emb, f.y) == sy) gammas.push_back(g);
  }
  if (gammas.size() != 1) {
    rep.fail(std::to_string(gammas.size()) + " elements gamma satisfy sigma(y) = gamma^-1 y at a=" + to_hex(a));
    return rep;
  }
  const PGL2Elem& g = gammas.front();
  rep.detail("gamma", g.str()).detail("gamma_class", to_string(classify(g)));
  for (const auto& w : f.points) {
    if (f.root_at(w).frobenius(k) != f.root_at(g.act(w))) {
      rep.fail("sigma(r_w) != r_gamma(w) at w=" + w.str() + ", a=" + to_hex(a));
      break;
    }
  }
  return rep;
}

CheckReport verify_orbit_structure(unsigned n, unsigned k, std::uint64_t seed, Perturb perturb) {
  CheckReport rep("orbit-structure");
  rep.param("n", std::to_string(n)).param("k", std::to_string(k));
  ReportTimer timer(rep);
  const auto as = nonzero(FieldContext::make(k));
  std::vector<CheckReport> parts(as.size());
  parallel_for(as.size(), [&](std::size_t i) { parts[i] = orbit_structure(n, as[i], seed, perturb); });
  fold(rep, parts);
  std::map<std::string, std::size_t> cases;
  for (const auto& p : parts) {
    for (const auto& [name, v] : p.details) {
      if (name == "case") ++cases["case " + v];
    }
  }
  for (const auto& [key, cnt] : cases) rep.detail(key, std::to_string(cnt));
  return rep;
}

}  // namespace mcm
