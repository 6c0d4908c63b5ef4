#include "omega/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <thread>

#include "omega/monotone.hpp"

namespace omega {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// contiguous work ranges [lo,hi) per worker; exceptions resurface after join
void run_chunks(
    unsigned long long total, unsigned workers,
    const std::function<void(unsigned long long, unsigned long long, unsigned)>& fn) {
    if (workers <= 1 || total <= 1) {
        fn(0, total, 0);
        return;
    }
    const unsigned long long base = total / workers, rem = total % workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errs(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const unsigned long long lo =
            w * base + std::min<unsigned long long>(w, rem);
        const unsigned long long hi = lo + base + (w < rem ? 1 : 0);
        threads.emplace_back([&fn, &errs, lo, hi, w] {
            try {
                fn(lo, hi, w);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

// true iff no relabeling/transpose of M is lexicographically smaller
bool is_canonical_rep(const IntMatrix& M, const std::vector<std::vector<int>>& perms) {
    const int n = M.dim();
    for (const auto& p : perms)
        for (int f = 0; f < 2; ++f) {
            for (int e = 0; e < n * n; ++e) {
                const int i = e / n, j = e % n;
                const Int& t = f ? M.at(p[j], p[i]) : M.at(p[i], p[j]);
                const int c = cmp(t, M.at(i, j));
                if (c < 0) return false;
                if (c > 0) break;
            }
        }
    return true;
}

std::vector<double> cluster_sorted(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end());
    std::vector<double> reps;
    double last = 0.0;
    for (double v : vals) {
        if (reps.empty() || v - last > 1e-9 * std::max(1.0, last)) reps.push_back(v);
        last = v;
    }
    return reps;
}

Check make_check(std::string name, std::string expected, std::string actual,
                 bool pass) {
    return Check{std::move(name), std::move(expected), std::move(actual), pass};
}

Check ge_check(const std::string& name, long long value, const std::string& bound_str,
               bool pass) {
    return make_check(name, ">= " + bound_str, std::to_string(value), pass);
}

}  // namespace

IntMatrix canonical_class(const IntMatrix& M) {
    const int n = M.dim();
    const auto perms = all_permutations(n);
    IntMatrix best = M;
    IntMatrix cand(n);
    for (const auto& p : perms)
        for (int f = 0; f < 2; ++f) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    cand.at(i, j) = f ? M.at(p[j], p[i]) : M.at(p[i], p[j]);
            for (int e = 0; e < n * n; ++e) {
                const int c = cmp(cand.at(e / n, e % n), best.at(e / n, e % n));
                if (c < 0) {
                    best = cand;
                    break;
                }
                if (c > 0) break;
            }
        }
    return best;
}

OmegaReport compute_omega(const EntrySet& A, std::size_t n, const OmegaOptions& opts) {
    if (n < 1) throw std::invalid_argument("omega: n must be positive");
    if (opts.workers < 1) throw std::invalid_argument("omega: workers must be positive");
    if (opts.budget < 1) throw std::invalid_argument("omega: budget must be positive");
    const auto t0 = std::chrono::steady_clock::now();

    const std::vector<long long> vals = A.values();
    const std::size_t b = vals.size(), nn = n * n;
    Int total_z = 1;
    for (std::size_t e = 0; e < nn; ++e) total_z *= static_cast<long>(b);
    if (cmp(total_z, static_cast<long>(opts.budget)) > 0)
        throw BudgetExceeded(total_z, opts.budget);
    const unsigned long long total = total_z.get_ui();

    const bool use_canonical =
        opts.dedup == DedupLevel::Canonical && n >= 2 && n <= 4;
    const auto perms = use_canonical ? all_permutations(static_cast<int>(n))
                                     : std::vector<std::vector<int>>{};
    const unsigned W = opts.workers;

    std::vector<std::set<IntPoly>> cps_local(W);
    std::vector<std::set<PerronKey>> keys_local(W);
    std::vector<std::vector<double>> floats_local(W);

    run_chunks(total, W, [&](unsigned long long lo, unsigned long long hi, unsigned w) {
        const int ni = static_cast<int>(n);
        IntMatrix M(ni);
        for (unsigned long long idx = lo; idx < hi; ++idx) {
            unsigned long long x = idx;
            for (int e = 0; e < ni * ni; ++e) {
                M.at(e / ni, e % ni) = static_cast<long>(vals[x % b]);
                x /= b;
            }
            if (use_canonical && !is_canonical_rep(M, perms)) continue;
            IntPoly cp = charpoly(M);
            if (opts.dedup == DedupLevel::None) {
                if (opts.mode == OmegaMode::Exact)
                    keys_local[w].insert(perron_key_of_charpoly(cp));
                else
                    floats_local[w].push_back(max_real_root_float(cp));
            }
            cps_local[w].insert(std::move(cp));
        }
    });

    std::set<IntPoly> cps;
    for (auto& s : cps_local) cps.merge(s);

    OmegaReport rep{A, n, opts.mode, 0, {}, {}, 0, 0, 0.0};
    rep.matrices_enumerated = static_cast<long long>(total);
    rep.distinct_charpolys = static_cast<long long>(cps.size());

    if (opts.dedup == DedupLevel::None) {
        if (opts.mode == OmegaMode::Exact) {
            std::set<PerronKey> keys;
            for (auto& s : keys_local) keys.merge(s);
            rep.keys.assign(keys.begin(), keys.end());
            rep.count = static_cast<long long>(rep.keys.size());
        } else {
            std::vector<double> all;
            for (auto& v : floats_local) all.insert(all.end(), v.begin(), v.end());
            rep.values_float = cluster_sorted(std::move(all));
            rep.count = static_cast<long long>(rep.values_float.size());
        }
    } else {
        const std::vector<IntPoly> cp_vec(cps.begin(), cps.end());
        if (opts.mode == OmegaMode::Exact) {
            std::vector<std::set<PerronKey>> kl(W);
            run_chunks(cp_vec.size(), W,
                       [&](unsigned long long lo, unsigned long long hi, unsigned w) {
                           for (unsigned long long i = lo; i < hi; ++i)
                               kl[w].insert(perron_key_of_charpoly(cp_vec[i]));
                       });
            std::set<PerronKey> keys;
            for (auto& s : kl) keys.merge(s);
            rep.keys.assign(keys.begin(), keys.end());
            rep.count = static_cast<long long>(rep.keys.size());
        } else {
            std::vector<double> all(cp_vec.size());
            run_chunks(cp_vec.size(), W,
                       [&](unsigned long long lo, unsigned long long hi, unsigned) {
                           for (unsigned long long i = lo; i < hi; ++i)
                               all[i] = max_real_root_float(cp_vec[i]);
                       });
            rep.values_float = cluster_sorted(std::move(all));
            rep.count = static_cast<long long>(rep.values_float.size());
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

OmegaReport compute_omega(const EntrySet& A, std::size_t n, OmegaMode mode) {
    OmegaOptions opts;
    opts.mode = mode;
    return compute_omega(A, n, opts);
}

std::set<Int> sumset(const EntrySet& A, std::size_t n) {
    if (n < 1) throw std::invalid_argument("sumset: n must be positive");
    std::set<Int> cur;
    for (long long a : A.values()) cur.insert(Int(static_cast<long>(a)));
    for (std::size_t m = 1; m < n; ++m) {
        std::set<Int> next;
        for (const Int& s : cur)
            for (long long a : A.values()) next.insert(s + static_cast<long>(a));
        cur = std::move(next);
    }
    return cur;
}

std::set<Int> productset(const EntrySet& A, std::size_t n) {
    if (n < 1) throw std::invalid_argument("productset: n must be positive");
    std::set<Int> cur;
    for (long long a : A.values()) cur.insert(Int(static_cast<long>(a)));
    for (std::size_t m = 1; m < n; ++m) {
        std::set<Int> next;
        for (const Int& s : cur)
            for (long long a : A.values()) next.insert(s * static_cast<long>(a));
        cur = std::move(next);
    }
    return cur;
}

BoundsReport verify_bounds(const EntrySet& A, std::size_t n,
                           const OmegaOptions& opts) {
    OmegaOptions o = opts;
    o.mode = OmegaMode::Exact;
    const EntrySet plain = A.with_zero(false);
    const EntrySet zero = A.with_zero(true);
    const OmegaReport base = compute_omega(plain, n, o);
    const OmegaReport withz = compute_omega(zero, n, o);
    const auto sums = sumset(plain, n);
    const auto prods = productset(plain, n);

    BoundsReport r{A, n, 0, 0, 0, 0, Rat(0), Rat(0), std::nullopt, {}};
    r.omega_count = base.count;
    r.omega_zero_count = withz.count;
    r.sumset_size = static_cast<long long>(sums.size());
    r.productset_size = static_cast<long long>(prods.size());

    const long long kk = static_cast<long long>(plain.size());
    const ChiWitness cw = chi(plain);
    const PiWitness pw = pi(plain);
    r.chi_bound = cw.chi * Rat(static_cast<long>(kk * kk));
    Rat ksz(1);
    for (std::size_t e = 0; e + 1 < n; ++e) ksz *= Rat(static_cast<long>(kk));
    r.pi_bound = pw.pi * ksz;

    r.checks.push_back(ge_check("radius count covers the sumset", r.omega_count,
                                std::to_string(r.sumset_size),
                                r.omega_count >= r.sumset_size));
    const long long sp = std::max(r.sumset_size, r.productset_size);
    r.checks.push_back(ge_check("zero-adjoined count covers sums and products",
                                r.omega_zero_count, std::to_string(sp),
                                r.omega_zero_count >= sp));
    if (n == 2 && cw.chi > 0) {
        r.checks.push_back(make_check(
            "dilation family lower bound", ">= " + r.chi_bound.get_str(),
            std::to_string(r.omega_count), Rat(static_cast<long>(r.omega_count)) >= r.chi_bound));
    }
    if (n >= 3 && pw.pi > 0) {
        r.checks.push_back(make_check(
            "prime-witness lower bound (zero adjoined)", ">= " + r.pi_bound.get_str(),
            std::to_string(r.omega_zero_count),
            Rat(static_cast<long>(r.omega_zero_count)) >= r.pi_bound));
        long long tail = 1;
        for (std::size_t e = 0; e + 2 < n; ++e) tail *= kk;
        r.checks.push_back(ge_check("zero-adjoined power tail", r.omega_zero_count,
                                    std::to_string(tail),
                                    r.omega_zero_count >= tail));
    }
    const long long aa = static_cast<long long>(sumset(plain, 2).size());
    r.checks.push_back(ge_check("doubling sumset", aa, std::to_string(2 * kk - 1),
                                aa >= 2 * kk - 1));
    if (n > 1 && kk > 1 && std::max<long long>(n, kk) > 2) {
        r.monotone_bound = theorem2_bound(n, static_cast<std::size_t>(kk));
        r.checks.push_back(ge_check("monotone sequence lower bound", r.omega_count,
                                    std::to_string(*r.monotone_bound),
                                    r.omega_count >= *r.monotone_bound));
    }
    return r;
}

long long rk_formula(std::size_t k) {
    if (k < 1) throw std::invalid_argument("rk_formula: k must be positive");
    const long long kk = static_cast<long long>(k);
    return (2 * kk * kk * kk - kk * kk + kk) / 2;
}

bool is_geometric(const EntrySet& A) {
    const auto& e = A.elements();
    if (e.size() <= 2) return true;
    for (std::size_t i = 1; i + 1 < e.size(); ++i)
        if (Int(static_cast<long>(e[i + 1])) * static_cast<long>(e[0]) !=
            Int(static_cast<long>(e[i])) * static_cast<long>(e[1]))
            return false;
    return true;
}

SearchResult rk_search(std::size_t k, long long range_max,
                       const OmegaOptions& opts) {
    if (k < 2) throw std::invalid_argument("rk_search: k must be at least 2");
    if (range_max < static_cast<long long>(k))
        throw std::invalid_argument("rk_search: range must hold k distinct values");
    const auto t0 = std::chrono::steady_clock::now();

    // gcd-1 k-subsets of {1..range_max}, in lexicographic order
    std::vector<std::vector<long long>> subsets;
    std::vector<long long> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<long long>(i) + 1;
    while (true) {
        long long g = 0;
        for (long long v : pick) g = std::gcd(g, v);
        if (g == 1) subsets.push_back(pick);
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] < range_max - static_cast<long long>(k - 1 - i)) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) goto done;
        }
    }
done:;

    // each subset costs a k^4 matrix scan
    Int work = Int(static_cast<long>(subsets.size()));
    for (int e = 0; e < 4; ++e) work *= static_cast<long>(k);
    if (cmp(work, static_cast<long>(opts.budget)) > 0)
        throw BudgetExceeded(work, opts.budget);

    std::vector<long long> counts(subsets.size());
    OmegaOptions per = opts;
    per.mode = OmegaMode::Exact;
    per.workers = 1;  // parallelism lives at the subset level
    run_chunks(subsets.size(), opts.workers,
               [&](unsigned long long lo, unsigned long long hi, unsigned) {
                   for (unsigned long long i = lo; i < hi; ++i)
                       counts[i] = compute_omega(EntrySet(subsets[i]), 2, per).count;
               });

    SearchResult res;
    res.k = k;
    res.range_max = range_max;
    res.formula_value = rk_formula(k);
    res.sets_examined = static_cast<long long>(subsets.size());
    res.minimum = *std::min_element(counts.begin(), counts.end());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (counts[i] == res.minimum) {
            EntrySet w(subsets[i]);
            if (is_geometric(w)) res.geometric_achieves_minimum = true;
            res.witnesses.push_back(std::move(w));
        }
    res.elapsed_ms = ms_since(t0);
    return res;
}

Conj4Report conjecture4_check(const EntrySet& B, std::size_t k,
                              const OmegaOptions& opts) {
    if (B.size() != k - 1)
        throw std::invalid_argument("conjecture4_check: |B| must equal k - 1");
    OmegaOptions o = opts;
    o.mode = OmegaMode::Exact;
    Conj4Report r;
    r.k = k;
    r.count = compute_omega(B.with_zero(true), 2, o).count;
    r.formula_value = rk_formula(k);
    r.holds = r.count < r.formula_value;
    r.note =
        "compares the two-by-two radius count of the zero-adjoined set "
        "against (2k^3 - k^2 + k)/2";
    return r;
}

}  // namespace omega
