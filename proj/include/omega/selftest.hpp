#pragma once

#include <cstdint>
#include <vector>

#include "omega/report.hpp"

namespace omega {

// Randomized property suites over exact arithmetic.  Each returns one
// aggregated Check per property ("trials passed / trials run"), so a
// caller can print a short table and gate on all_pass.

// Raising a single entry of a positive matrix raises the spectral radius.
std::vector<Check> single_entry_monotonicity(std::uint64_t seed, int trials = 200);

// If the first r rows share a row sum larger than the common sum of the
// remaining (identical) rows, the Perron vector is larger on 1..r.
std::vector<Check> row_sum_dominance(std::uint64_t seed, int trials = 100);

// Swapping a smaller entry toward the larger Perron coordinate within one
// row raises the spectral radius.
std::vector<Check> exchange_monotonicity(std::uint64_t seed, int trials = 100);

// charpoly(companion_matrix(c, d, a)) equals the closed form, and the
// sign-alternating variant is demonstrably different.
std::vector<Check> companion_polynomial_identity(std::uint64_t seed, int trials = 100);

// The closed-form increment census matches a direct recount of the tuple
// sequence for 2 <= n, k <= 7.
std::vector<Check> census_agreement();

// Exact and floating enumeration agree on |Omega_2(A)| for every
// A within {1..5} of size 2 or 3.
std::vector<Check> exact_float_agreement();

// Everything above with sub-seeds derived from one master seed.
std::vector<Check> run_selftests(std::uint64_t seed);

}  // namespace omega
