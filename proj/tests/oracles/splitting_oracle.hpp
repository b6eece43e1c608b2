#pragma once

#include "ulrich/ring.hpp"

#include <vector>

namespace oracle {

// Independent splitting-principle computation of the total Chern class of
// the twisted form bundle W^p(t) on P^m, m <= 5. Works with formal Chern
// roots r_1..r_m of the cotangent bundle, expands the product over
// p-subsets of (1 + t*tau - sum of the chosen roots), rewrites each
// symmetric coefficient in the elementary symmetric basis and substitutes
// e_k = C(m+1,k) (-tau)^k from c(W^1) = (1-tau)^(m+1). Independent of the
// exact-sequence chain used by the engine.
std::vector<ulrich::Int> twisted_forms_chern(int m, int p, int t);

} // namespace oracle
