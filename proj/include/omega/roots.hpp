#pragma once

#include <optional>
#include <vector>

#include "omega/poly.hpp"

namespace omega {

// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
    Rat lo, hi;
    RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
    }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool disjoint_from(const RationalInterval& o) const { return hi < o.lo || o.hi < lo; }
};

// Sturm chain of a squarefree polynomial.  Remainders are sign-corrected
// pseudo-remainders reduced by their (positive) content, so every chain
// member equals the classical Sturm remainder up to a positive factor.
class SturmChain {
public:
    explicit SturmChain(IntPoly squarefree);

    const IntPoly& poly() const { return chain_.front(); }
    int sign_changes(const Rat& x) const;
    // Number of distinct real roots in (a, b].  Requires a <= b; valid
    // even when an endpoint is itself a root (drop-zeros convention).
    int count(const Rat& a, const Rat& b) const;

private:
    std::vector<IntPoly> chain_;
};

// Distinct real roots of squarefree_part(p) in (I.lo, I.hi].
// Precondition: p nonzero and neither endpoint is a root of p.
int sturm_count(const IntPoly& p, const RationalInterval& I);

// Rational roots of a squarefree polynomial, plus the cofactor with all
// rational linear factors removed.
struct RationalRootSplit {
    std::vector<Rat> roots;  // ascending, all simple
    IntPoly remaining;       // primitive, positive lead, no rational roots
};
RationalRootSplit strip_rational_roots(const IntPoly& squarefree_p);

// Isolation of the maximum real root of squarefree_part(p).
//
// Invariants: `iv` is closed with non-root endpoints, contains exactly
// one root of `sf` (the maximum real one); `exact` is set iff that root
// is rational.  refine_* shrink `iv` while preserving the invariants.
class IsolatedMaxRoot {
public:
    IsolatedMaxRoot(IntPoly sf, SturmChain chain, RationalInterval iv, std::optional<Rat> exact);

    const IntPoly& sf() const { return sf_; }
    const SturmChain& chain() const { return chain_; }
    const RationalInterval& interval() const { return iv_; }
    const std::optional<Rat>& exact() const { return exact_; }
    bool is_rational() const { return exact_.has_value(); }

    void refine_once();
    void refine_below(const Rat& width);
    double to_double() const;

private:
    IntPoly sf_;
    SturmChain chain_;
    RationalInterval iv_;
    std::optional<Rat> exact_;
};

// Locate the maximum real root of p exactly.  Throws std::invalid_argument
// when p is zero, constant, or has no real root.  The returned interval is
// refined below `width` when given, else below CauchyBound(p) * 2^-40.
IsolatedMaxRoot locate_max_real_root(const IntPoly& p, const std::optional<Rat>& width = std::nullopt);

// Public convenience form returning just the isolating interval.
RationalInterval isolate_max_real_root(const IntPoly& p);

}  // namespace omega
