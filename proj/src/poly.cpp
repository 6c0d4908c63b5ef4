#include "omega/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace omega {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::x() { return IntPoly(std::vector<Int>{0, 1}); }

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::invalid_argument("leading(): zero polynomial");
    return c_.back();
}

const Int& IntPoly::constant_term() const {
    static const Int zero = 0;
    return c_.empty() ? zero : c_.front();
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shift_up(int k) const {
    if (c_.empty()) return IntPoly();
    std::vector<Int> r(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    // sign of p(u/v) equals sign of sum a_i u^i v^(n-i): v > 0 canonically
    if (c_.empty()) return 0;
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int acc = 0;
    Int upow = 1;
    std::vector<Int> vpow(c_.size(), 1);
    for (std::size_t i = c_.size() - 1; i-- > 0;) vpow[i] = vpow[i + 1] * v;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        acc += c_[i] * upow * vpow[i];
        if (i + 1 < c_.size()) upow *= u;
    }
    return sgn(acc);
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (c_.empty()) return IntPoly();
    Int g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Int& a = c_[i];
        if (a == 0) continue;
        Int mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i >= 1) {
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<RatPoly, RatPoly> divmod_rational(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("divmod_rational: division by zero polynomial");
    RatPoly rem;
    rem.c.assign(a.coeffs().begin(), a.coeffs().end());
    while (!rem.c.empty() && rem.c.back() == 0) rem.c.pop_back();
    int db = b.degree();
    RatPoly quo;
    if (rem.degree() >= db) quo.c.assign(rem.degree() - db + 1, Rat(0));
    Rat lb(b.leading());
    while (rem.degree() >= db) {
        int k = rem.degree() - db;
        Rat f = rem.c.back() / lb;
        quo.c[k] = f;
        for (int i = 0; i <= db; ++i) rem.c[k + i] -= f * Rat(b[i]);
        while (!rem.c.empty() && rem.c.back() == 0) rem.c.pop_back();
    }
    return {std::move(quo), std::move(rem)};
}

bool divides(const IntPoly& d, const IntPoly& p, IntPoly* quotient) {
    if (d.is_zero()) return p.is_zero();
    if (p.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (p.degree() < d.degree()) return false;
    auto [q, r] = divmod_rational(p, d);
    if (!r.c.empty()) return false;
    std::vector<Int> qi(q.c.size());
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        if (q.c[i].get_den() != 1) return false;
        qi[i] = q.c[i].get_num();
    }
    if (quotient) *quotient = IntPoly(std::move(qi));
    return true;
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem: zero divisor");
    if (a.degree() < b.degree())
        throw std::invalid_argument("pseudo_rem: deg a < deg b");
    const Int& lb = b.leading();
    int db = b.degree();
    int steps = a.degree() - db + 1;  // total lb multiplications defining prem
    IntPoly rem = a;
    int done = 0;
    while (!rem.is_zero() && rem.degree() >= db) {
        Int lr = rem.leading();
        rem = rem * lb - b.shift_up(rem.degree() - db) * lr;
        ++done;
    }
    for (; done < steps; ++done) rem = rem * lb;
    return rem;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = a.is_zero() ? IntPoly() : a.primitive_part();
    IntPoly v = b.is_zero() ? IntPoly() : b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = (u.degree() >= v.degree()) ? pseudo_rem(u, v) : u;
        u = std::move(v);
        v = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return u;
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    IntPoly pp = p.primitive_part();
    if (pp.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    IntPoly q;
    if (!divides(g, pp, &q))
        throw std::logic_error("squarefree_part: gcd does not divide");
    return q.primitive_part();
}

Int cauchy_root_bound(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("cauchy_root_bound: degree < 1");
    Int lead = abs(p.leading());
    Int mx = 0;
    for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, Int(abs(p[i])));
    // ceil(mx / lead) + 1
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), mx.get_mpz_t(), lead.get_mpz_t());
    return q + 1;
}

}  // namespace omega
