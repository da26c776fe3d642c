#include "mcm/pgl2_scan.hpp"

#include <algorithm>

#include "mcm/parallel.hpp"

namespace mcm {

std::vector<PGL2Elem> stabilizer_scan(const SplitFrame& f, const FieldElem& c, const FieldElem& j) {
  const FieldElem target = e_root(f, c, j);
  const auto& emb = f.fq_embedding();
  std::vector<PGL2Elem> out;
  for (const auto& g : all_elements(*f.fq)) {
    const FieldElem moved = g.inverse().act(emb, f.y);
    if (e_at(f, moved, c, j) == target) out.push_back(g);
  }
  return out;
}

CheckReport verify_gammay(const SplitFrame& f, Perturb perturb) {
  CheckReport rep("gammay");
  rep.param("n", std::to_string(f.n)).param("k", std::to_string(f.k)).param("a", to_hex(f.a));
  ReportTimer timer(rep);
  const auto& emb = f.fq_embedding();
  const auto& fq = *f.fq;
  const ProjPoint zero = ProjPoint::finite(fq.zero()), one = ProjPoint::finite(fq.one()), inf = ProjPoint::infinity();
  for (const auto& g : all_elements(fq)) {
    const FieldElem r1 = f.root_at(g.act(one));
    FieldElem rhs = (r1 + f.root_at(g.act(inf))) / (r1 + f.root_at(g.act(zero)));
    if (perturb == Perturb::rhs) rhs += f.ambient->one();
    if (g.inverse().act(emb, f.y) != rhs) {
      rep.fail("gamma^-1 y mismatch at gamma=" + g.str());
      break;
    }
  }
  return rep;
}

CheckReport verify_stabilizer(const SplitFrame& f, Perturb perturb) {
  CheckReport rep("stabilizer");
  rep.param("n", std::to_string(f.n)).param("k", std::to_string(f.k)).param("a", to_hex(f.a));
  ReportTimer timer(rep);
  const auto& fq = *f.fq;
  const std::uint64_t q = f.q();
  std::vector<std::pair<FieldElem, FieldElem>> pairs;
  for (const auto& c : fq.elements()) {
    if (c.is_zero()) continue;
    for (const auto& j : fq_one_set(f.n, fq)) pairs.emplace_back(c, j);
  }
  std::vector<std::optional<std::string>> errors(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& [c, j] = pairs[i];
    const auto stab = stabilizer_scan(f, c, j);
    const FieldElem d = sqrt(j);
    const auto want = dihedral_group(d, perturb == Perturb::rhs ? c : c / d);
    const std::string where = " at c=" + to_hex(c) + " j=" + to_hex(j);
    if (stab.size() != 2 * (q + 1)) errors[i] = "stabilizer has " + std::to_string(stab.size()) + " elements" + where;
    else if (!std::binary_search(stab.begin(), stab.end(), PGL2Elem::identity(fq))) errors[i] = "identity missing" + where;
    else if (stab != want) errors[i] = "stabilizer differs from D_{d,c/d}" + where;
  });
  std::size_t ok = 0;
  for (const auto& e : errors) {
    if (e) rep.fail(*e);
    else ++ok;
  }
  rep.detail("pairs_passed", std::to_string(ok) + "/" + std::to_string(pairs.size()));
  rep.absorb(verify_gammay(f));
  return rep;
}

}  // namespace mcm
