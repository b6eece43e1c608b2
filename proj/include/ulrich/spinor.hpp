#pragma once

#include "ulrich/bundle.hpp"
#include "ulrich/report.hpp"

#include <vector>

namespace ulrich {

enum class SpinorBase { s, sprime, sdoubleprime };

// Symbolic identity of a spinor bundle on Q_n: S for odd n, S'/S'' for
// even n, of rank 2^floor((n-1)/2). The ulrich_twist flag selects the
// twist by h that makes the bundle Ulrich for the hyperplane polarization.
struct SpinorKind {
    SpinorBase base = SpinorBase::s;
    bool ulrich_twist = false;
};

// Exact Chern data of the chosen spinor bundle on Q_n, 2 <= n <= n_max.
//
// Even n = 2m: c_i for i <= m comes from the restrictions to the two
// families of m-planes, which split the bundle into sums of twisted forms
// (even twists on one family, odd on the other; the labeling convention
// here puts the odd-twist sum on the family of l). c_j for j > m is solved
// degree by degree from the exact-sequence identity
//     c(S') * c(S''(1)) = 1,
// whose degree-j part determines 2 c_j over the basis; every halving is
// asserted exact. Odd n: pull back S'_{n+1} under Q_n in Q_{n+1}.
BundleClass spinor_chern(int n, SpinorKind kind);

// nu of the Ulrich-twisted spinor for each n in [lo, hi].
std::vector<std::pair<int, int>> spinor_nu_table(int lo, int hi);

// Re-verifies the defining identities for the computed classes at even n:
// the sequence identity above together with its S''-side, the duality
// identity (which pairs S' with S'' when m is odd and with itself when m
// is even), and c_i(S') = c_i(S'') for i != m.
VerificationReport spinor_identities_check(int n);

int spinor_rank(int n);

} // namespace ulrich
