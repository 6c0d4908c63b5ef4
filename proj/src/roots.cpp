#include "omega/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "omega/intfactor.hpp"

namespace omega {

// ---------------------------------------------------------------- intfactor

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n must be composite, odd, > 1.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Int& n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<Int> primes;
    Int m = n;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (m % p == 0) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, int>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

std::vector<Int> divisors(const Int& n, std::size_t cap) {
    auto fac = factorize(n);
    std::vector<Int> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        if (base * (e + 1) > cap) throw std::runtime_error("divisors: too many divisors");
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------- SturmChain

SturmChain::SturmChain(IntPoly squarefree) {
    if (squarefree.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(std::move(squarefree));
    if (chain_[0].degree() < 1) return;
    chain_.push_back(chain_[0].derivative());
    while (chain_.back().degree() >= 1) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        IntPoly r = pseudo_rem(a, b);
        if (r.is_zero()) throw std::invalid_argument("SturmChain: polynomial not squarefree");
        // prem scales a by lc(b)^delta; undo a negative scale, then apply
        // the Sturm sign flip, then shrink by the positive content.
        int delta = a.degree() - b.degree() + 1;
        if (b.leading() < 0 && delta % 2 == 1) r = -r;
        r = -r;
        Int ct = r.content();
        std::vector<Int> rc(r.coeffs());
        for (auto& v : rc) v /= ct;
        chain_.push_back(IntPoly(std::move(rc)));
    }
}

int SturmChain::sign_changes(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmChain::count(const Rat& a, const Rat& b) const {
    if (a > b) throw std::invalid_argument("SturmChain::count: a > b");
    if (a == b) return 0;
    return sign_changes(a) - sign_changes(b);
}

int sturm_count(const IntPoly& p, const RationalInterval& I) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.sign_at(I.lo) == 0 || p.sign_at(I.hi) == 0)
        throw std::invalid_argument("sturm_count: interval endpoint is a root");
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) return 0;
    return SturmChain(sf).count(I.lo, I.hi);
}

// ------------------------------------------------------ rational root split

RationalRootSplit strip_rational_roots(const IntPoly& squarefree_p) {
    if (squarefree_p.is_zero())
        throw std::invalid_argument("strip_rational_roots: zero polynomial");
    RationalRootSplit out;
    IntPoly q = squarefree_p.primitive_part();
    if (q.degree() >= 1 && q.constant_term() == 0) {
        IntPoly x = IntPoly::x();
        IntPoly quo;
        if (!divides(x, q, &quo)) throw std::logic_error("strip_rational_roots: x division");
        q = std::move(quo);
        out.roots.emplace_back(0);
        if (q.constant_term() == 0)
            throw std::invalid_argument("strip_rational_roots: input not squarefree");
    }
    if (q.degree() >= 1) {
        auto us = divisors(abs(q.constant_term()));
        auto vs = divisors(abs(q.leading()));
        for (const auto& v : vs) {
            for (const auto& u : us) {
                Int g;
                mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
                if (g != 1) continue;
                for (int s : {1, -1}) {
                    Rat cand(s > 0 ? u : Int(-u), v);
                    cand.canonicalize();
                    if (q.sign_at(cand) != 0) continue;
                    // divide out (v x - s u); exactness guaranteed by Gauss
                    IntPoly lin(std::vector<Int>{s > 0 ? Int(-u) : u, v});
                    IntPoly quo;
                    if (!divides(lin, q, &quo))
                        throw std::logic_error("strip_rational_roots: linear division");
                    q = std::move(quo);
                    out.roots.push_back(cand);
                }
                if (q.degree() < 1) break;
            }
            if (q.degree() < 1) break;
        }
    }
    out.remaining = q.degree() >= 1 ? q.primitive_part() : IntPoly::constant(1);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

// ------------------------------------------------------------ max-root locator

IsolatedMaxRoot::IsolatedMaxRoot(IntPoly sf, SturmChain chain, RationalInterval iv,
                                 std::optional<Rat> exact)
    : sf_(std::move(sf)), chain_(std::move(chain)), iv_(std::move(iv)), exact_(std::move(exact)) {}

void IsolatedMaxRoot::refine_once() {
    if (exact_) {
        // halve around the known root, keeping it strictly inside
        Rat lo = (iv_.lo + *exact_) / 2;
        Rat hi = (*exact_ + iv_.hi) / 2;
        iv_ = RationalInterval(std::move(lo), std::move(hi));
        return;
    }
    Rat m = iv_.mid();
    // m is never a root: the unique root inside is irrational here
    if (chain_.count(iv_.lo, m) == 1)
        iv_ = RationalInterval(iv_.lo, std::move(m));
    else
        iv_ = RationalInterval(std::move(m), iv_.hi);
}

void IsolatedMaxRoot::refine_below(const Rat& width) {
    while (iv_.width() >= width) refine_once();
}

double IsolatedMaxRoot::to_double() const {
    if (exact_) return exact_->get_d();
    return iv_.mid().get_d();
}

IsolatedMaxRoot locate_max_real_root(const IntPoly& p, const std::optional<Rat>& width) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("locate_max_real_root: need degree >= 1");
    IntPoly sf = squarefree_part(p);
    RationalRootSplit split = strip_rational_roots(sf);
    const IntPoly& alg = split.remaining;

    std::optional<Rat> best_rational;
    if (!split.roots.empty()) best_rational = split.roots.back();

    bool have_alg = false;
    Rat lo = 0, hi = 0;
    SturmChain alg_chain = alg.degree() >= 1 ? SturmChain(alg) : SturmChain(IntPoly::constant(1));
    if (alg.degree() >= 1) {
        Int B = cauchy_root_bound(alg);
        lo = Rat(-B);
        hi = Rat(B);
        int total = alg_chain.count(lo, hi);
        if (total > 0) {
            have_alg = true;
            // keep >= 1 root above lo and none above hi; shrink to one root
            while (alg_chain.count(lo, hi) > 1) {
                Rat m = (lo + hi) / 2;
                if (alg_chain.count(m, hi) >= 1)
                    lo = m;
                else
                    hi = m;
            }
        }
    }

    if (!have_alg && !best_rational)
        throw std::invalid_argument("locate_max_real_root: no real root");

    if (have_alg && best_rational) {
        // shrink the algebraic interval until the rational candidate is outside
        while (best_rational >= lo && best_rational <= hi) {
            Rat m = (lo + hi) / 2;
            if (alg_chain.count(m, hi) >= 1)
                lo = m;
            else
                hi = m;
        }
        if (*best_rational > hi) have_alg = false;  // rational wins
    }

    Rat target;
    if (width) {
        target = *width;
    } else {
        Int B = cauchy_root_bound(sf);
        mpz_class denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 2, 40);
        target = Rat(B, denom);
        target.canonicalize();
    }

    SturmChain sf_chain(sf);
    if (!have_alg) {
        // maximum real root is the rational r: return [r - delta, r + delta]
        const Rat& r = *best_rational;
        Rat delta = 1;
        while (true) {
            Rat a = r - delta, b = r + delta;
            if (sf.sign_at(a) != 0 && sf.sign_at(b) != 0 &&
                sf_chain.count(a, b) == 1 && 2 * delta < target)
                break;
            delta /= 2;
        }
        IsolatedMaxRoot out(std::move(sf), std::move(sf_chain),
                            RationalInterval(r - delta, r + delta), r);
        return out;
    }

    // algebraic winner: push any remaining rational roots out of [lo, hi]
    auto interval_clean = [&]() {
        for (const auto& r : split.roots)
            if (r >= lo && r <= hi) return false;
        return true;
    };
    while (!interval_clean()) {
        Rat m = (lo + hi) / 2;
        if (alg_chain.count(m, hi) >= 1)
            lo = m;
        else
            hi = m;
    }
    IsolatedMaxRoot out(std::move(sf), std::move(sf_chain), RationalInterval(lo, hi),
                        std::nullopt);
    out.refine_below(target);
    return out;
}

RationalInterval isolate_max_real_root(const IntPoly& p) {
    return locate_max_real_root(p).interval();
}

}  // namespace omega
