#include "omega/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace omega {

namespace {

constexpr double kPowerTol = 1e-13;
constexpr int kPowerMaxIter = 100000;

// Loose initial isolation width for comparison work; refined on demand.
Rat coarse_width() { return Rat(1, 256); }

bool power_iteration(const IntMatrix& M, double tol, double* rho_out, RealVector* vec_out) {
    int n = M.dim();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = M.at(i, j).get_d();
    RealVector v(n, 1.0 / n), w(n);
    for (int it = 0; it < kPowerMaxIter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0;
            for (int j = 0; j < n; ++j) s += a[i][j] * v[j];
            w[i] = s;
        }
        double lo = w[0] / v[0], hi = lo;
        for (int i = 1; i < n; ++i) {
            double r = w[i] / v[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        double sum = 0;
        for (double x : w) sum += x;
        for (int i = 0; i < n; ++i) v[i] = w[i] / sum;
        if (hi - lo <= tol * hi) {
            if (rho_out) *rho_out = (lo + hi) / 2;
            if (vec_out) *vec_out = v;
            return true;
        }
    }
    return false;
}

}  // namespace

int count_roots_closed(const IntPoly& p, const RationalInterval& I) {
    if (p.is_zero()) throw std::invalid_argument("count_roots_closed: zero polynomial");
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) return 0;
    SturmChain chain(sf);
    int c = chain.count(I.lo, I.hi);  // (lo, hi]
    if (sf.sign_at(I.lo) == 0) ++c;
    return c;
}

double max_real_root_float(const IntPoly& cp) {
    return locate_max_real_root(cp).to_double();
}

double rho_float(const IntMatrix& M) {
    if (!M.is_nonnegative()) throw std::invalid_argument("rho_float: matrix has negative entries");
    if (M.is_positive()) {
        double rho;
        if (power_iteration(M, kPowerTol, &rho, nullptr)) return rho;
        // fall through to the exact path on non-convergence
    }
    return max_real_root_float(charpoly(M));
}

RealVector perron_vector(const IntMatrix& M) {
    if (!M.is_positive()) throw std::invalid_argument("perron_vector: matrix must be positive");
    RealVector v;
    if (!power_iteration(M, kPowerTol, nullptr, &v))
        throw std::runtime_error("perron_vector: power iteration did not converge");
    return v;
}

PerronKey perron_key_of_charpoly(const IntPoly& cp) {
    IsolatedMaxRoot loc = locate_max_real_root(cp);
    // the spectral radius is the unique maximum real root; its minimal
    // polynomial is the one irreducible factor vanishing on it
    std::optional<IntPoly> minpoly;
    for (const auto& [f, m] : factor(cp)) {
        bool hit;
        if (loc.exact())
            hit = f.sign_at(*loc.exact()) == 0;
        else
            hit = SturmChain(f).count(loc.interval().lo, loc.interval().hi) == 1;
        if (hit) {
            minpoly = f;
            break;
        }
    }
    if (!minpoly) throw std::logic_error("perron_key: no factor matches the maximum root");
    Rat lo = loc.interval().lo, hi = loc.interval().hi;
    if (lo < 0) lo = 0;  // spectral radii are nonnegative
    return PerronKey{*minpoly, RationalInterval(std::move(lo), std::move(hi)),
                     loc.exact()};
}

PerronKey perron_key(const IntMatrix& M) {
    if (!M.is_nonnegative())
        throw std::invalid_argument("perron_key: matrix has negative entries");
    return perron_key_of_charpoly(charpoly(M));
}

bool rho_eq_charpoly(const IntPoly& pa, const IntPoly& pb) {
    IsolatedMaxRoot a = locate_max_real_root(pa, coarse_width());
    IsolatedMaxRoot b = locate_max_real_root(pb, coarse_width());
    if (a.exact() && b.exact()) return *a.exact() == *b.exact();
    if (a.exact().has_value() != b.exact().has_value()) return false;  // rational vs irrational
    // both irrational: equal only if they share a root of g = gcd
    IntPoly g = poly_gcd(a.sf(), b.sf());
    if (g.degree() < 1) return false;
    SturmChain gchain(g);
    while (true) {
        if (a.interval().disjoint_from(b.interval())) return false;
        bool a_on_g = gchain.count(a.interval().lo, a.interval().hi) == 1;
        bool b_on_g = gchain.count(b.interval().lo, b.interval().hi) == 1;
        if (!a_on_g || !b_on_g) return false;
        Rat lo = std::min(a.interval().lo, b.interval().lo);
        Rat hi = std::max(a.interval().hi, b.interval().hi);
        if (gchain.count(lo, hi) == 1) return true;
        a.refine_once();
        b.refine_once();
    }
}

Ordering rho_cmp_charpoly(const IntPoly& pa, const IntPoly& pb) {
    if (rho_eq_charpoly(pa, pb)) return Ordering::EQ;
    IsolatedMaxRoot a = locate_max_real_root(pa, coarse_width());
    IsolatedMaxRoot b = locate_max_real_root(pb, coarse_width());
    while (!a.interval().disjoint_from(b.interval())) {
        a.refine_once();
        b.refine_once();
    }
    return a.interval().hi < b.interval().lo ? Ordering::LT : Ordering::GT;
}

bool rho_eq(const IntMatrix& A, const IntMatrix& B) {
    if (!A.is_nonnegative() || !B.is_nonnegative())
        throw std::invalid_argument("rho_eq: matrices must be nonnegative");
    return rho_eq_charpoly(charpoly(A), charpoly(B));
}

Ordering rho_cmp(const IntMatrix& A, const IntMatrix& B) {
    if (!A.is_nonnegative() || !B.is_nonnegative())
        throw std::invalid_argument("rho_cmp: matrices must be nonnegative");
    return rho_cmp_charpoly(charpoly(A), charpoly(B));
}

}  // namespace omega
