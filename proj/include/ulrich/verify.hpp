#pragma once

#include "ulrich/report.hpp"

namespace ulrich {

// Named verification suites against frozen reference values. Suite names
// match the CLI subcommands.

// Non-big classification table for 2 <= n <= 12; rmax_factor bounds the
// enumeration at rmax_factor * spinor_rank(n) per n.
VerificationReport verify_table1(int rmax_factor);

// The frozen non-big multiplicity pairs on Q_n with a + b <= mult_bound,
// in (total rank, lexicographic) order.
std::vector<std::pair<int, int>> expected_table1_pairs(int n, int mult_bound);

// The ten Chern coefficients of S' on Q_10, middle pair compared up to the
// simultaneous relabeling of the two plane families.
VerificationReport verify_chern_q10();

// Spinor nu values for 2 <= n <= 10.
VerificationReport verify_nu_table();

// Named certificate integers (Q2 grid, Q4, Q5, Q6, Q10 pairings).
VerificationReport verify_certificates();

// P^2 x P^2 deduction for ranks 1..8.
VerificationReport verify_thm4();

// Ulrich family on P^1 x P^(n-1).
VerificationReport verify_example_un(int n, int r);

VerificationReport verify_theorem2_cases(int m_max);

// forces-big boundary: false for 3 <= n <= 10, true for 11 <= n <= 40.
VerificationReport verify_line_criterion();

} // namespace ulrich
