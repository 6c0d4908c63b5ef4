#pragma once

// Internal helpers: integer factorization for rational-root and
// interpolation-factor candidate generation.  Desk-scale inputs.

#include <vector>

#include "omega/poly.hpp"

namespace omega {

// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
// Trial division for small primes, Pollard rho (Brent) above that.
std::vector<std::pair<Int, int>> factorize(const Int& n);

// All positive divisors of n >= 1, ascending.  Throws std::runtime_error
// if the divisor count exceeds `cap` (guards pathological inputs).
std::vector<Int> divisors(const Int& n, std::size_t cap = 200000);

}  // namespace omega
