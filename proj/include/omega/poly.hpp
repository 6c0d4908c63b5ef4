#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace omega {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Z, coefficients in ascending degree
// order.  The zero polynomial has an empty coefficient vector; every
// other polynomial has a nonzero leading coefficient (trailing zeros
// are trimmed on construction).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly constant(const Int& c);
    static IntPoly x();

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;
    const Int& constant_term() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    // lexicographic by (degree, coefficient list); gives deterministic orderings
    bool operator<(const IntPoly& o) const;

    IntPoly derivative() const;
    IntPoly shift_up(int k) const;  // multiply by x^k

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // exact sign of the value at a rational point: -1, 0, +1
    int sign_at(const Rat& x) const;

    // gcd of all coefficients, always >= 0 (0 only for the zero polynomial)
    Int content() const;
    // content removed and leading coefficient made positive
    IntPoly primitive_part() const;

    std::string str() const;  // human form, e.g. "x^3 - x^2 - x - 1"

private:
    std::vector<Int> c_;
    void trim();
};

// Quotient/remainder over Q for integer inputs; asserts b != 0.
// Returned pair (q, r) satisfies a = q*b + r with deg r < deg b,
// coefficients rational.
struct RatPoly {
    std::vector<Rat> c;  // ascending, trailing zeros trimmed
    int degree() const { return static_cast<int>(c.size()) - 1; }
};
std::pair<RatPoly, RatPoly> divmod_rational(const IntPoly& a, const IntPoly& b);

// True iff d divides p exactly over Q (equivalently over Z when d is
// primitive); on success *quotient receives the integer quotient.
bool divides(const IntPoly& d, const IntPoly& p, IntPoly* quotient = nullptr);

// Pseudo-remainder prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a
// divided by b, computed entirely over Z.  Requires deg a >= deg b >= 0.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// Primitive gcd over Z via the primitive pseudo-remainder sequence.
// Result is primitive with positive leading coefficient, or zero when
// both inputs are zero.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'): same roots as p, all simple.  Primitive, positive lead.
IntPoly squarefree_part(const IntPoly& p);

// Integer B >= 1 with every complex root of p inside |z| < B
// (Cauchy bound 1 + max |a_i| / |a_n|, rounded up).  Requires p nonzero
// of degree >= 1.
Int cauchy_root_bound(const IntPoly& p);

}  // namespace omega
