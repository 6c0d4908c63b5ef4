#include "omega/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace omega {

IntMatrix::IntMatrix(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("IntMatrix: n must be >= 1");
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("IntMatrix: entry count != n*n");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(static_cast<int>(rows.size())), e_() {
    if (n_ < 1) throw std::invalid_argument("IntMatrix: n must be >= 1");
    e_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row) e_.emplace_back(v);
    }
}

bool IntMatrix::is_nonnegative() const {
    for (const auto& v : e_)
        if (v < 0) return false;
    return true;
}

bool IntMatrix::is_positive() const {
    for (const auto& v : e_)
        if (v <= 0) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : e_)
        if (v != 0) return false;
    return true;
}

Int IntMatrix::row_sum(int i) const {
    Int s = 0;
    for (int j = 0; j < n_; ++j) s += at(i, j);
    return s;
}

Int IntMatrix::max_row_sum() const {
    Int m = row_sum(0);
    for (int i = 1; i < n_; ++i) m = std::max(m, row_sum(i));
    return m;
}

Int IntMatrix::min_row_sum() const {
    Int m = row_sum(0);
    for (int i = 1; i < n_; ++i) m = std::min(m, row_sum(i));
    return m;
}

Int IntMatrix::trace() const {
    Int s = 0;
    for (int i = 0; i < n_; ++i) s += at(i, i);
    return s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix T(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) T.at(j, i) = at(i, j);
    return T;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix::operator*: size mismatch");
    IntMatrix R(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) R.at(i, j) += a * o.at(k, j);
        }
    return R;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

IntPoly charpoly(const IntMatrix& M) {
    int n = M.dim();
    std::vector<Int> c(n + 1, 0);
    c[n] = 1;
    // Faddeev-LeVerrier: B_0 = I; C_k = M B_{k-1}; c_{n-k} = -tr(C_k)/k;
    // B_k = C_k + c_{n-k} I.  All divisions are exact.
    IntMatrix B(n);
    for (int i = 0; i < n; ++i) B.at(i, i) = 1;
    for (int k = 1; k <= n; ++k) {
        IntMatrix C = M * B;
        Int t = -C.trace();
        Int ck = t / k;
        if (ck * k != t) throw std::logic_error("charpoly: inexact trace division");
        c[n - k] = ck;
        B = C;
        for (int i = 0; i < n; ++i) B.at(i, i) += ck;
    }
    return IntPoly(std::move(c));
}

IntMatrix companion_matrix(const Int& c, const Int& d, const std::vector<Int>& a) {
    int n = static_cast<int>(a.size());
    if (n < 2) throw std::invalid_argument("companion_matrix: need n >= 2");
    IntMatrix M(n);
    for (int i = 0; i + 1 < n - 1; ++i) M.at(i, i + 1) = c;
    M.at(n - 2, n - 1) = d;
    for (int j = 0; j < n; ++j) M.at(n - 1, j) = a[j];
    return M;
}

IntPoly companion_charpoly(const Int& c, const Int& d, const std::vector<Int>& a) {
    int n = static_cast<int>(a.size());
    if (n < 2) throw std::invalid_argument("companion_charpoly: need n >= 2");
    std::vector<Int> f(n + 1, 0);
    f[n] = 1;
    f[n - 1] = -a[n - 1];
    Int cpow = 1;  // c^(n-2-i), built from i = n-2 downward
    for (int i = n - 2; i >= 0; --i) {
        f[i] = -d * cpow * a[i];
        cpow *= c;
    }
    return IntPoly(std::move(f));
}

IntPoly companion_charpoly_alternating(const Int& c, const Int& d, const std::vector<Int>& a) {
    int n = static_cast<int>(a.size());
    if (n < 2) throw std::invalid_argument("companion_charpoly_alternating: need n >= 2");
    std::vector<Int> f(n + 1, 0);
    f[n] = 1;
    f[n - 1] = -a[n - 1];
    Int cpow = 1;
    for (int i = n - 2; i >= 0; --i) {
        f[i] = ((n - i) % 2 == 0 ? d : -d) * cpow * a[i];
        cpow *= c;
    }
    return IntPoly(std::move(f));
}

}  // namespace omega
