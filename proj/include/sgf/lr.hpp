#pragma once

#include "sgf/rational.hpp"
#include "sgf/signature.hpp"

#include <map>

namespace sgf {

// Littlewood-Richardson expansion s_lambda s_mu = sum_eta c^{lambda mu}_eta s_eta
// for signatures of equal length, computed by the horizontal-strip chain rule:
// c^{lambda mu}_eta counts chains lambda = nu^0 c= nu^1 c= ... c= nu^N = eta where
// step v adds a horizontal strip of size mu_v and the cumulative row counts obey
// the lattice constraint cum_{v+1}(r) <= cum_v(r-1).  Scales far beyond the
// symbolic lr_expand route; the two are cross-checked in tests.
std::map<Signature, Int> lr_strips(const Signature& lambda, const Signature& mu,
                                   std::size_t max_states = 50'000'000);

}  // namespace sgf
