#pragma once

#include <initializer_list>
#include <vector>

#include "omega/poly.hpp"

namespace omega {

// Square matrix over Z, row-major storage.
class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("IntMatrix: n must be >= 1");
    }
    IntMatrix(int n, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    int dim() const { return n_; }
    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<Int>& entries() const { return e_; }

    bool is_nonnegative() const;
    bool is_positive() const;
    bool is_zero() const;
    Int row_sum(int i) const;
    Int max_row_sum() const;
    Int min_row_sum() const;
    Int trace() const;
    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    std::string str() const;  // bracketed rows, single line

private:
    int n_;
    std::vector<Int> e_;
};

// det(xI - M), monic of degree n, exact over Z (Faddeev-LeVerrier;
// the divisions by k are exact).
IntPoly charpoly(const IntMatrix& M);

// Structured n x n matrix (n = a.size() >= 2): c on the superdiagonal
// except position (n-1, n) which holds d, last row a_0 ... a_{n-1},
// zeros elsewhere.  With c = d = 1 this is the Frobenius companion
// matrix of x^n - a_{n-1} x^{n-1} - ... - a_0.
IntMatrix companion_matrix(const Int& c, const Int& d, const std::vector<Int>& a);

// Characteristic polynomial of companion_matrix(c, d, a), verified
// against the determinant:
//   x^n - a_{n-1} x^{n-1} - d * sum_{i=0}^{n-2} c^{n-2-i} a_i x^i
IntPoly companion_charpoly(const Int& c, const Int& d, const std::vector<Int>& a);

// Sign-alternating variant of the closed form: the x^i coefficient for
// i <= n-2 is (-1)^(n-i) d c^{n-2-i} a_i, which matches the determinant
// only when n - i is odd.  Kept so the discrepancy with the true
// characteristic polynomial can be demonstrated and reported.
IntPoly companion_charpoly_alternating(const Int& c, const Int& d, const std::vector<Int>& a);

}  // namespace omega
