#pragma once

#include "ulrich/report.hpp"
#include "ulrich/spinor.hpp"

#include <optional>
#include <vector>

namespace ulrich {

// Direct sum of Ulrich-twisted spinors on Q_n: multiplicities (a, b) of
// S'(1) and S''(1) for even n, a single multiplicity a of S(1) for odd n
// (b stays 0). a + b >= 1.
struct UlrichModel {
    int n = 0;
    int a = 0;
    int b = 0;

    int total_rank() const { return (a + b) * spinor_rank(n); }
    bool is_single_spinor() const { return a + b == 1; }
    std::string label() const;
};

struct ClassificationRow {
    UlrichModel model;
    int rank = 0;
    int nu = 0;
    bool big = false;
    std::vector<Int> witness; // certificate integers; sums to s_n(E^*)

    Json to_json() const;
};

BundleClass model_class(const UlrichModel& m);
int nu_of_model(const UlrichModel& m);

// All models of rank <= r_max that are not big, each with its certificate,
// ordered by total rank then lexicographically in (a, b). The non-big
// region is downward-closed in the multiplicities; the serial path prunes
// with that and the result is re-checked against it either way.
std::vector<ClassificationRow> classify_nonbig(int n, int r_max);
std::vector<ClassificationRow> classify_nonbig_serial(int n, int r_max);

// Evaluation of one model: nu, bigness, certificate terms.
ClassificationRow evaluate_model(const UlrichModel& m);

// Named dimension facts used by the bound certificates. These are inputs
// of the checks, not computed geometry.
long dim_lines_through_point_quadric(int n);       // n - 2
Int trivial_summand_count_on_lines(int n);         // 2^floor((n-3)/2)
long dim_mplanes_through_point_even_quadric(int m); // m(m-1)/2
long dim_mplanes_through_point_line_grassmannian(); // 1

// True when n - 2 + 2^floor((n-3)/2) < 2^floor((n-1)/2), i.e. the
// line-restriction bound fails and spinor bundles must be big.
bool line_criterion_forces_big(int n);

// The two closed-form case checks behind the small-numerical-dimension
// classification: the even-quadric inequality m(m-1)/2 >= 2^(m-1) - 1
// holds exactly for m in {2,3}, and the line-Grassmannian degree equation
// m + 1 = 2d - 1 with d = (2m)!/(m!(m+1)!) has no solution for m >= 3.
VerificationReport theorem2_case_checks(int m_max);

} // namespace ulrich
