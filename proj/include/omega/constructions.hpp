#pragma once

#include <optional>
#include <vector>

#include "omega/report.hpp"
#include "omega/spectral.hpp"

namespace omega {

// A finite set of positive integers; zero can be adjoined through the
// flag (entry sets stay positive, the flag mirrors A ∪ {0}).
class EntrySet {
public:
    explicit EntrySet(std::vector<long long> elements, bool include_zero = false);

    const std::vector<long long>& elements() const { return elems_; }
    bool include_zero() const { return zero_; }
    std::size_t size() const { return elems_.size(); }  // zero not counted
    long long min() const { return elems_.front(); }
    long long max() const { return elems_.back(); }
    bool contains(long long v) const;
    // elements plus 0 when the flag is set; what matrices draw from
    std::vector<long long> values() const;
    EntrySet with_zero(bool flag) const;
    std::string str() const;  // e.g. "{1,2,4,8}" or "{0,1,2}"

    bool operator==(const EntrySet& o) const {
        return elems_ == o.elems_ && zero_ == o.zero_;
    }
    bool operator<(const EntrySet& o) const {
        return elems_ != o.elems_ ? elems_ < o.elems_ : zero_ < o.zero_;
    }

private:
    std::vector<long long> elems_;
    bool zero_;
};

struct ChiWitness {
    Rat chi;                      // in [0, 1]
    std::optional<long long> c;   // non-square multiplier, set iff chi > 0
};

struct PiWitness {
    Rat pi;                       // in [0, 1]
    std::optional<long long> p;   // prime, set iff pi > 0
    std::optional<long long> c;   // element of A' \ pN
    std::optional<long long> d;   // element of (A' ∩ pN) \ p²N
};

// All rows equal to a; spectral radius is the common row sum.
IntMatrix sum_matrix(const std::vector<long long>& a);

// a_1..a_{n-1} on the superdiagonal, a_n in the corner (n, 1); the
// eigenvalues are the complex n-th roots of a_1*...*a_n.
IntMatrix product_matrix(const std::vector<long long>& a);

// [[a, a1], [a2, a]]; spectral radius a + sqrt(a1*a2).
IntMatrix shift_antidiag(long long a, long long a1, long long a2);

// Largest |A ∩ cA| / |A| over non-square c in 2..max(A)/min(A) with a
// nonempty intersection; ties resolved toward the smallest c.
ChiWitness chi(const EntrySet& A);

// [[a, b], [c*b, a]] with a, b, c*b all in A and c non-square; the
// eigenvalues are a ± b*sqrt(c).
IntMatrix chi_matrix(const EntrySet& A, long long a, long long b, long long c);

// A' = A / gcd(A).
EntrySet normalize(const EntrySet& A);

// Largest |A' ∩ pN| / |A'| over primes p such that some element of
// A' ∩ pN is not in p²N; smallest maximizing p, smallest witnesses.
PiWitness pi(const EntrySet& A);

// n x n matrix (n = a.size() + 1 >= 3): superdiagonal c with corner
// (n-1, n) entry d, bottom row (c, a_1, ..., a_{n-1}).  Requires the
// witness memberships p ∤ c, p ‖ d, p | a_{n-1}; then the characteristic
// polynomial x^n - a_{n-1}x^{n-1} - d*sum c^{n-2-i}ã_i x^i satisfies the
// Eisenstein criterion at p, so it is already the minimal polynomial of
// the spectral radius.
IntMatrix eisenstein_matrix(long long p, long long c, long long d,
                            const std::vector<long long>& a);

// True iff p divides every non-leading coefficient of the content-free
// monic f and p² does not divide the constant term.  Rejects non-prime p.
bool eisenstein_check(long long p, const IntPoly& f);

// Row sums do not predict the Perron-entry order once the equal-rows
// hypothesis is dropped: rows one and two have different sums yet equal
// Perron entries.
struct FriedlandReport {
    IntMatrix M;
    std::vector<Check> checks;
};
FriedlandReport friedland_counterexample();

// rho(A) < rho(B) does not survive a common bordering.
struct BorderingReport {
    IntMatrix A, B, A3, B3;
    std::vector<Check> checks;
};
BorderingReport bordering_counterexample();

}  // namespace omega
