#include "omega/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "omega/intfactor.hpp"
#include "omega/roots.hpp"

namespace omega {

namespace {

constexpr long kComboBudget = 5000000;

// Lagrange interpolation through (xs[i], ys[i]); returns nullopt unless
// the result has integer coefficients and exact degree xs.size() - 1.
std::optional<IntPoly> interpolate_exact_degree(const std::vector<long>& xs,
                                                const std::vector<Int>& ys) {
    std::size_t n = xs.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis.push_back(Rat(0));
            for (std::size_t k = basis.size() - 1; k > 0; --k)
                basis[k] = basis[k - 1] - Rat(xs[j]) * basis[k];
            basis[0] = -Rat(xs[j]) * basis[0];
            denom *= Rat(xs[i] - xs[j]);
        }
        Rat w = Rat(ys[i]) / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += w * basis[k];
    }
    if (acc.back() == 0) return std::nullopt;
    std::vector<Int> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (acc[k].get_den() != 1) return std::nullopt;
        c[k] = acc[k].get_num();
    }
    return IntPoly(std::move(c));
}

// Find one nontrivial factor (degree 2 .. deg/2) of a primitive
// squarefree polynomial without rational roots, or nullopt if
// irreducible.
std::optional<IntPoly> kronecker_factor(const IntPoly& r) {
    int deg = r.degree();
    long combos = 0;
    for (int dg = 2; dg <= deg / 2; ++dg) {
        // evaluation points 0, 1, -1, 2, -2, ...; none is a root
        std::vector<long> xs;
        for (long t = 0; static_cast<int>(xs.size()) <= dg; ++t)
            xs.push_back(t == 0 ? 0 : (t % 2 ? (t + 1) / 2 : -(t / 2)));
        std::vector<std::vector<Int>> cand(dg + 1);
        for (int j = 0; j <= dg; ++j) {
            Int val = r.eval(Int(xs[j]));
            auto divs = divisors(abs(val));
            for (const auto& d : divs) {
                cand[j].push_back(d);
                cand[j].push_back(-d);
            }
        }
        std::vector<std::size_t> idx(dg + 1, 0);
        std::vector<Int> ys(dg + 1);
        while (true) {
            if (++combos > kComboBudget)
                throw std::runtime_error("factor: interpolation search budget exceeded");
            for (int j = 0; j <= dg; ++j) ys[j] = cand[j][idx[j]];
            auto g = interpolate_exact_degree(xs, ys);
            if (g) {
                IntPoly gp = g->primitive_part();
                if (gp.degree() == dg && divides(gp, r)) return gp;
            }
            int j = 0;
            while (j <= dg && ++idx[j] == cand[j].size()) idx[j++] = 0;
            if (j > dg) break;
        }
    }
    return std::nullopt;
}

// All irreducible factors of a primitive positive-lead squarefree
// polynomial of degree >= 1.
void split_squarefree(const IntPoly& q, std::vector<IntPoly>& out) {
    RationalRootSplit s = strip_rational_roots(q);
    for (const auto& root : s.roots) {
        // root u/v in lowest terms -> primitive factor v x - u
        out.push_back(IntPoly(std::vector<Int>{-root.get_num(), root.get_den()}));
    }
    IntPoly rem = s.remaining;
    while (rem.degree() >= 1) {
        if (rem.degree() <= 3) {  // no rational roots, so degree <= 3 is irreducible
            out.push_back(rem);
            return;
        }
        auto g = kronecker_factor(rem);
        if (!g) {
            out.push_back(rem);
            return;
        }
        split_squarefree(*g, out);
        IntPoly quo;
        if (!divides(*g, rem, &quo)) throw std::logic_error("factor: cofactor division");
        rem = quo.primitive_part();
    }
}

}  // namespace

std::vector<PolyFactor> factor(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    std::vector<PolyFactor> out;
    if (p.degree() < 1) return out;
    IntPoly pp = p.primitive_part();
    IntPoly sf = squarefree_part(pp);
    std::vector<IntPoly> irr;
    split_squarefree(sf, irr);
    std::sort(irr.begin(), irr.end());
    for (const auto& f : irr) {
        int m = 0;
        IntPoly t = pp, quo;
        while (divides(f, t, &quo)) {
            t = std::move(quo);
            ++m;
        }
        out.push_back({f, m});
    }
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("is_irreducible: need degree >= 1");
    auto fs = factor(p);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

}  // namespace omega
