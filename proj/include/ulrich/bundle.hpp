#pragma once

#include "ulrich/ring.hpp"

#include <vector>

namespace ulrich {

// Rank plus total Chern class: the unit of all bundle calculus here. The
// Chern class has unit codegree-0 part and vanishes above min(rank, dim).
struct BundleClass {
    RingPtr ring;
    int rank = 0;
    CohClass chern;

    BundleClass() = default;
    BundleClass(RingPtr r, int rk, CohClass c);

    static BundleClass trivial(RingPtr r, int rk);
    bool operator==(const BundleClass&) const = default;
};

BundleClass dual(const BundleClass& e);

// E tensor a line bundle with first Chern class lambda (pure codegree 1):
// c_k = sum_i C(r-i, k-i) c_i lambda^(k-i).
BundleClass twist(const BundleClass& e, const CohClass& lambda);

BundleClass whitney_sum(const BundleClass& e, const BundleClass& f);

// Total Segre class in the convention s(E) c(E) = 1.
CohClass segre(const BundleClass& e);

// s_i(E^*) = (-1)^i s_i(E), the codegree-i part.
CohClass segre_dual(const BundleClass& e, int i);

// Numerical dimension r - 1 + max{k : s_k(E) != 0}. Meaningful when the
// caller knows E is (the class of) a globally generated bundle; the formula
// is computed from Chern data regardless.
int nu(const BundleClass& e);

struct BignessWitness {
    bool big = false;
    Int witness; // integral of s_n(E^*)
};

// Big iff s_n(E^*) > 0; same global-generation caveat as nu.
BignessWitness is_big(const BundleClass& e);

struct SumCertificate {
    bool big = false;
    std::vector<Int> terms; // t_i = integral of s_i(E^*) s_{n-i}(F^*)
};

// Direct-sum bigness certificate: E + F is big iff some term is positive.
// Every term must be nonnegative for globally generated inputs; a negative
// term throws, it signals invalid input or an engine bug.
SumCertificate sum_big_certificate(const BundleClass& e, const BundleClass& f);

// Chern data of the twisted form bundle on projective m-space (as the
// one-factor product ring): rank C(m,p), computed through the exact
// sequences 0 -> W^p(p) -> Lambda^p V (x) O -> W^(p-1)(p) -> 0 and a twist.
BundleClass chern_of_twisted_forms(int m, int p, int t);

} // namespace ulrich
