#pragma once

// Exhaustive scans of PGL2(q) acting on a splitting frame.

#include <vector>

#include "mcm/pgl2.hpp"
#include "mcm/splitting.hpp"

namespace mcm {

/// Every gamma with e(gamma^-1 y, c, j) = e(y, c, j), ascending.
std::vector<PGL2Elem> stabilizer_scan(const SplitFrame& f, const FieldElem& c, const FieldElem& j);

/// gamma^-1 y = (r_gamma(1) - r_gamma(inf)) / (r_gamma(1) - r_gamma(0)) for every gamma.
CheckReport verify_gammay(const SplitFrame& f, Perturb perturb = Perturb::none);

/// stabilizer_scan against D_{d, c/d}, d = sqrt(j), for every (c, j) pair; includes verify_gammay.
CheckReport verify_stabilizer(const SplitFrame& f, Perturb perturb = Perturb::none);

}  // namespace mcm
