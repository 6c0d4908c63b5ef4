#include "omega/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "omega/intfactor.hpp"

namespace omega {

namespace {

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    Int v(static_cast<long>(p));
    return mpz_probab_prime_p(v.get_mpz_t(), 30) != 0;
}

bool is_square_ll(long long v) {
    Int x(static_cast<long>(v));
    return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Check make_check(std::string name, std::string expected, std::string actual, bool pass) {
    return Check{std::move(name), std::move(expected), std::move(actual), pass};
}

}  // namespace

EntrySet::EntrySet(std::vector<long long> elements, bool include_zero)
    : elems_(std::move(elements)), zero_(include_zero) {
    if (elems_.empty()) throw std::invalid_argument("EntrySet: empty");
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] <= 0) throw std::invalid_argument("EntrySet: elements must be positive");
        if (i > 0 && elems_[i] == elems_[i - 1])
            throw std::invalid_argument("EntrySet: duplicate element");
    }
}

bool EntrySet::contains(long long v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

std::vector<long long> EntrySet::values() const {
    std::vector<long long> out;
    if (zero_) out.push_back(0);
    out.insert(out.end(), elems_.begin(), elems_.end());
    return out;
}

EntrySet EntrySet::with_zero(bool flag) const { return EntrySet(elems_, flag); }

std::string EntrySet::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    if (zero_) {
        os << "0";
        first = false;
    }
    for (long long v : elems_) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << "}";
    return os.str();
}

IntMatrix sum_matrix(const std::vector<long long>& a) {
    if (a.empty()) throw std::invalid_argument("sum_matrix: empty tuple");
    for (long long v : a)
        if (v <= 0) throw std::invalid_argument("sum_matrix: entries must be positive");
    int n = static_cast<int>(a.size());
    IntMatrix M(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = static_cast<long>(a[j]);
    return M;
}

IntMatrix product_matrix(const std::vector<long long>& a) {
    if (a.size() < 2) throw std::invalid_argument("product_matrix: need n >= 2");
    for (long long v : a)
        if (v <= 0) throw std::invalid_argument("product_matrix: entries must be positive");
    int n = static_cast<int>(a.size());
    IntMatrix M(n);
    for (int i = 0; i + 1 < n; ++i) M.at(i, i + 1) = static_cast<long>(a[i]);
    M.at(n - 1, 0) = static_cast<long>(a[n - 1]);
    return M;
}

IntMatrix shift_antidiag(long long a, long long a1, long long a2) {
    if (a <= 0 || a1 <= 0 || a2 <= 0)
        throw std::invalid_argument("shift_antidiag: entries must be positive");
    IntMatrix M(2);
    M.at(0, 0) = M.at(1, 1) = static_cast<long>(a);
    M.at(0, 1) = static_cast<long>(a1);
    M.at(1, 0) = static_cast<long>(a2);
    return M;
}

ChiWitness chi(const EntrySet& A) {
    ChiWitness best{Rat(0), std::nullopt};
    long long bound = A.max() / A.min();
    for (long long c = 2; c <= bound; ++c) {
        if (is_square_ll(c)) continue;
        long long hits = 0;
        for (long long y : A.elements())
            if (A.contains(c * y)) ++hits;
        if (hits == 0) continue;
        Rat ratio(static_cast<long>(hits), static_cast<long>(A.size()));
        ratio.canonicalize();
        if (ratio > best.chi) {
            best.chi = ratio;
            best.c = c;
        }
    }
    return best;
}

IntMatrix chi_matrix(const EntrySet& A, long long a, long long b, long long c) {
    if (c < 2 || is_square_ll(c)) throw std::invalid_argument("chi_matrix: c must be a non-square >= 2");
    if (!A.contains(a)) throw std::invalid_argument("chi_matrix: a not in the set");
    if (!A.contains(b) || !A.contains(c * b))
        throw std::invalid_argument("chi_matrix: b and c*b must both lie in the set");
    IntMatrix M(2);
    M.at(0, 0) = M.at(1, 1) = static_cast<long>(a);
    M.at(0, 1) = static_cast<long>(b);
    M.at(1, 0) = static_cast<long>(c * b);
    return M;
}

EntrySet normalize(const EntrySet& A) {
    long long g = 0;
    for (long long v : A.elements()) g = std::gcd(g, v);
    std::vector<long long> out;
    out.reserve(A.size());
    for (long long v : A.elements()) out.push_back(v / g);
    return EntrySet(std::move(out), A.include_zero());
}

PiWitness pi(const EntrySet& A) {
    EntrySet Ap = normalize(A);
    PiWitness best{Rat(0), std::nullopt, std::nullopt, std::nullopt};
    std::set<long long> primes;
    for (long long v : Ap.elements())
        if (v >= 2)
            for (const auto& [p, e] : factorize(Int(static_cast<long>(v))))
                primes.insert(p.get_si());
    for (long long p : primes) {
        std::vector<long long> in_p, witnesses_d;
        long long witness_c = 0;
        for (long long v : Ap.elements()) {
            if (v % p == 0) {
                in_p.push_back(v);
                if (v % (p * p) != 0) witnesses_d.push_back(v);
            } else if (witness_c == 0) {
                witness_c = v;  // exists because gcd(A') = 1
            }
        }
        if (in_p.empty() || witnesses_d.empty()) continue;
        Rat ratio(static_cast<long>(in_p.size()), static_cast<long>(Ap.size()));
        ratio.canonicalize();
        if (ratio > best.pi) {
            best = PiWitness{ratio, p, witness_c, witnesses_d.front()};
        }
    }
    return best;
}

IntMatrix eisenstein_matrix(long long p, long long c, long long d,
                            const std::vector<long long>& a) {
    if (!is_prime_ll(p)) throw std::invalid_argument("eisenstein_matrix: p must be prime");
    if (a.size() < 2) throw std::invalid_argument("eisenstein_matrix: need n >= 3");
    if (c <= 0 || d <= 0) throw std::invalid_argument("eisenstein_matrix: c, d must be positive");
    for (long long v : a)
        if (v <= 0) throw std::invalid_argument("eisenstein_matrix: entries must be positive");
    if (c % p == 0) throw std::invalid_argument("eisenstein_matrix: p must not divide c");
    if (d % p != 0 || d % (p * p) == 0)
        throw std::invalid_argument("eisenstein_matrix: d must be in pN \\ p^2N");
    if (a.back() % p != 0)
        throw std::invalid_argument("eisenstein_matrix: a_{n-1} must be a multiple of p");
    std::vector<Int> row{Int(static_cast<long>(c))};
    for (long long v : a) row.emplace_back(static_cast<long>(v));
    return companion_matrix(Int(static_cast<long>(c)), Int(static_cast<long>(d)), row);
}

bool eisenstein_check(long long p, const IntPoly& f) {
    if (!is_prime_ll(p)) throw std::invalid_argument("eisenstein_check: p must be prime");
    if (f.degree() < 1) throw std::invalid_argument("eisenstein_check: need degree >= 1");
    IntPoly g = f.primitive_part();
    if (g.leading() != 1)
        throw std::invalid_argument("eisenstein_check: polynomial not monic after content stripping");
    Int P(static_cast<long>(p));
    for (int i = 0; i < g.degree(); ++i)
        if (g[i] % P != 0) return false;
    return g.constant_term() % (P * P) != 0;
}

FriedlandReport friedland_counterexample() {
    IntMatrix M{{8, 8, 8}, {9, 9, 4}, {2, 2, 12}};
    std::vector<Check> checks;

    PerronKey key = perron_key(M);
    IntPoly expect_min(std::vector<Int>{-20, 1});
    checks.push_back(make_check("spectral radius is exactly 20", expect_min.str(),
                                key.minpoly.str(), key.minpoly == expect_min));

    // M (2,2,1)^T = 20 (2,2,1)^T over the integers
    std::vector<Int> v{2, 2, 1};
    bool eigen = true;
    for (int i = 0; i < 3; ++i) {
        Int s = 0;
        for (int j = 0; j < 3; ++j) s += M.at(i, j) * v[j];
        eigen = eigen && (s == 20 * v[i]);
    }
    checks.push_back(make_check("(2,2,1) is an eigenvector for 20", "M v = 20 v",
                                eigen ? "M v = 20 v" : "mismatch", eigen));

    RealVector w = perron_vector(M);
    bool equal12 = std::abs(w[0] - w[1]) <= 1e-10;
    checks.push_back(make_check("Perron entries 1 and 2 equal within 1e-10", "0",
                                fmt_double(std::abs(w[0] - w[1])), equal12));

    bool sums_ok = M.row_sum(0) == 24 && M.row_sum(1) == 22 && M.row_sum(2) == 16;
    checks.push_back(make_check("row sums", "(24,22,16)",
                                "(" + M.row_sum(0).get_str() + "," + M.row_sum(1).get_str() +
                                    "," + M.row_sum(2).get_str() + ")",
                                sums_ok));

    // rows 1 and 2: different sums, equal Perron entries -> the row-sum
    // order does not transfer to the Perron vector here
    bool mismatch = (M.row_sum(0) > M.row_sum(1)) && equal12 && (w[1] > w[2] + 1e-6);
    checks.push_back(make_check("row-sum order does not follow Perron order",
                                "sum1 > sum2 yet v1 = v2", mismatch ? "confirmed" : "not confirmed",
                                mismatch));
    return FriedlandReport{M, std::move(checks)};
}

BorderingReport bordering_counterexample() {
    BorderingReport r{IntMatrix{{1, 2}, {1, 1}},
                      IntMatrix{{2, 1}, {1, 1}},
                      IntMatrix{{1, 2, 1}, {1, 1, 3}, {1, 1, 3}},
                      IntMatrix{{2, 1, 1}, {1, 1, 3}, {1, 1, 3}},
                      {}};
    double ra = rho_float(r.A), rb = rho_float(r.B);
    double ra3 = rho_float(r.A3), rb3 = rho_float(r.B3);
    r.checks.push_back(make_check("rho(A) = 2.414 within 1e-3", "2.414", fmt_double(ra),
                                  std::abs(ra - 2.414) <= 1e-3));
    r.checks.push_back(make_check("rho(B) = 2.618 within 1e-3", "2.618", fmt_double(rb),
                                  std::abs(rb - 2.618) <= 1e-3));
    r.checks.push_back(make_check("rho(A3) = 4.791 within 1e-3", "4.791", fmt_double(ra3),
                                  std::abs(ra3 - 4.791) <= 1e-3));
    r.checks.push_back(make_check("rho(B3) = 4.732 within 1e-3", "4.732", fmt_double(rb3),
                                  std::abs(rb3 - 4.732) <= 1e-3));
    r.checks.push_back(make_check("rho(A) < rho(B) certified exactly", "LT",
                                  rho_cmp(r.A, r.B) == Ordering::LT ? "LT" : "not LT",
                                  rho_cmp(r.A, r.B) == Ordering::LT));
    r.checks.push_back(make_check("rho(A3) > rho(B3) certified exactly", "GT",
                                  rho_cmp(r.A3, r.B3) == Ordering::GT ? "GT" : "not GT",
                                  rho_cmp(r.A3, r.B3) == Ordering::GT));
    return r;
}

}  // namespace omega
