#pragma once

#include "ulrich/bundle.hpp"
#include "ulrich/report.hpp"

#include <string>
#include <vector>

namespace ulrich {

// One factor of a box-product summand on P^a: the twisted form bundle
// W^p(t), with p = 0 meaning the line bundle O(t). The tangent twist
// T(-1) is stored as W^(a-1)(a).
struct FormAtom {
    int p = 0;
    int t = 0;
};

struct BoxSummand {
    std::vector<FormAtom> atoms; // one per factor
};

// A direct sum of box products of form atoms over P^{a1} x ... x P^{ak}.
struct BoxBundle {
    std::vector<int> dims;
    std::vector<BoxSummand> summands;

    int total_dimension() const;
    int rank() const;
};

// Cohomology dimensions h^q(P^m, W^p(t)), q = 0..m, by the closed formula;
// at most one entry is nonzero.
std::vector<Int> bott_cohomology(int m, int p, int t);

// All cohomology of one summand twisted by O(-s, ..., -s), via Kunneth.
std::vector<Int> summand_twist_cohomology(const BoxBundle& b, int summand, int s);

struct UlrichCheckRow {
    int twist = 0;   // p in 1..n
    int summand = 0;
    int q = 0;
    Int dim;         // offending cohomology dimension
};

struct UlrichCheck {
    bool ulrich = true;
    std::vector<UlrichCheckRow> failures;
};

// Ulrich vanishing for the O(1,...,1) polarization: H^i(E(-p)) = 0 for all
// i and 1 <= p <= dim.
UlrichCheck is_ulrich_split(const BoxBundle& b);

// Chern data of a box bundle in the product ring.
BundleClass box_bundle_class(const BoxBundle& b);

struct DeductionStep {
    std::string name;
    Json data;
    bool ok = true;
};

struct DeductionRecord {
    std::string name;
    std::vector<DeductionStep> steps;

    bool ok() const;
    void add(std::string name, Json data, bool ok);
    Json to_json() const;
    std::string to_markdown() const;
};

// The Ulrich family O(n-2) box T(-1) + (O(n-1) box O)^(r-n+1) on
// P^1 x P^(n-1): certifies the Ulrich vanishing, c_1^n > 0 and nu = r+1.
DeductionRecord example_un_pipeline(int n, int r);

// The P^2 x P^2 deduction for one rank r: solves the degree equation for
// beta, enumerates the resolution multiplicities, and derives the second
// Chern class consequence of each branch on the hyperplane-section
// threefold (branch 1 pins the rank to 1, branch 2 to 2 with
// c_2 = A^2+AB+4B^2 and s_4(E^*) = 6), so both branches force bigness.
DeductionRecord p2xp2_pipeline(int r);

DeductionRecord p2xp2_pipeline_range(int r_lo, int r_hi);

} // namespace ulrich
