#pragma once

#include <optional>
#include <vector>

#include "omega/factor.hpp"
#include "omega/matrix.hpp"
#include "omega/roots.hpp"

namespace omega {

using RealVector = std::vector<double>;

enum class Ordering { LT, EQ, GT };

// Exact identity of the spectral radius of a nonnegative integer matrix.
// Two nonnegative matrices have the same spectral radius iff their keys'
// minimal polynomials coincide: the spectral radius is the maximum real
// root of the characteristic polynomial, hence of its own minimal
// polynomial, and a monic irreducible polynomial determines its maximum
// real root.
struct PerronKey {
    IntPoly minpoly;           // monic, irreducible over Q
    RationalInterval iso;      // closed, lo >= 0, isolates the maximum real root
    std::optional<Rat> exact;  // set iff the spectral radius is rational

    bool operator==(const PerronKey& o) const { return minpoly == o.minpoly; }
    bool operator<(const PerronKey& o) const { return minpoly < o.minpoly; }
};

// Distinct real roots of squarefree_part(p) in the closed interval
// [I.lo, I.hi]; endpoints may be roots.
int count_roots_closed(const IntPoly& p, const RationalInterval& I);

// Spectral radius as a double.  Positive matrices use power iteration
// with Collatz-Wielandt bounds (tol 1e-13, <= 1e5 iterations, exact
// fallback); any zero entry routes through the exact characteristic
// polynomial.  Requires a nonnegative matrix.
double rho_float(const IntMatrix& M);

// Perron eigenvector of a positive matrix, normalized to sum 1.
RealVector perron_vector(const IntMatrix& M);

// Exact key: minimal polynomial of the spectral radius plus an isolating
// interval.  Requires a nonnegative matrix.
PerronKey perron_key(const IntMatrix& M);
PerronKey perron_key_of_charpoly(const IntPoly& cp);

// Exact spectral-radius comparisons for nonnegative matrices.
bool rho_eq(const IntMatrix& A, const IntMatrix& B);
Ordering rho_cmp(const IntMatrix& A, const IntMatrix& B);

// Same comparisons given precomputed characteristic polynomials (each
// must have at least one real root, true for any nonnegative matrix).
bool rho_eq_charpoly(const IntPoly& pa, const IntPoly& pb);
Ordering rho_cmp_charpoly(const IntPoly& pa, const IntPoly& pb);

// Maximum real root of a characteristic polynomial as a double.
double max_real_root_float(const IntPoly& cp);

}  // namespace omega
