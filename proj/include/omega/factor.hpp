#pragma once

#include <vector>

#include "omega/poly.hpp"

namespace omega {

struct PolyFactor {
    IntPoly f;         // primitive, irreducible over Q, positive leading coefficient
    int multiplicity;
};

// Complete factorization over Z up to the rational constant:
// p = c * prod f_i^{m_i} with the f_i distinct, sorted, primitive,
// irreducible, positive-lead.  Throws std::invalid_argument on the zero
// polynomial.  Degree >= 4 cofactors are handled by divisor-tuple
// interpolation, which is exponential in principle; a search budget
// guards against pathological inputs (std::runtime_error).
std::vector<PolyFactor> factor(const IntPoly& p);

// Irreducibility over Q (constants are units; requires degree >= 1).
bool is_irreducible(const IntPoly& p);

}  // namespace omega
