// End-to-end gate: ten criteria, one PASS/FAIL line each, exit 0 only if
// all pass.  argv[1] is the CLI binary; criteria 1 and 10 drive it as a
// subprocess.  Every tolerance and frozen value is pinned here.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "omega/constructions.hpp"
#include "omega/enumerate.hpp"
#include "omega/monotone.hpp"
#include "omega/selftest.hpp"
#include "omega/spectral.hpp"

using json = nlohmann::json;
using namespace omega;

namespace {

std::string g_cli;
int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

struct CliRun {
    int exit_code = 127;
    std::string out;
    double seconds = 0.0;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    Timer t;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.seconds = t.s();
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : 128;
    return r;
}

void report(int num, bool pass, const std::string& detail) {
    std::printf("[%2d] %s  %s\n", num, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v, int prec = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

EntrySet random_set(std::mt19937_64& rng, std::size_t max_size, long long max_entry) {
    const std::size_t sz = 1 + rng() % max_size;
    std::set<long long> pool;
    while (pool.size() < sz)
        pool.insert(1 + static_cast<long long>(rng() % static_cast<unsigned long long>(max_entry)));
    return EntrySet(std::vector<long long>(pool.begin(), pool.end()));
}

// 1. CLI `counterexamples`: the four radii within 1e-3, both orderings
//    certified, every embedded check passing, under one second.
void criterion1() {
    const CliRun r = run_cli("counterexamples");
    bool ok = r.exit_code == 0 && r.seconds < 1.0;
    std::string note;
    if (ok) {
        try {
            const json j = json::parse(r.out);
            const json& bd = j.at("result").at("bordering_reversal");
            const double expect[4] = {2.414, 2.618, 4.791, 4.732};  // tol 1e-3
            const double got[4] = {bd.at("rho_m1"), bd.at("rho_m2"),
                                   bd.at("rho_m1_bordered"), bd.at("rho_m2_bordered")};
            for (int i = 0; i < 4; ++i) ok = ok && std::fabs(got[i] - expect[i]) < 1e-3;
            ok = ok && bd.at("small_order") == "<" && bd.at("bordered_order") == ">";
            for (const json& c : j.at("checks")) ok = ok && c.at("pass").get<bool>();
            note = "rho " + fmt(got[0], 3) + " < " + fmt(got[1], 3) +
                   " reversed to " + fmt(got[2], 3) + " > " + fmt(got[3], 3);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("unparseable CLI output: ") + e.what();
        }
    } else {
        note = "exit " + std::to_string(r.exit_code);
    }
    report(1, ok, "CLI counterexamples: " + note + " (" + fmt(r.seconds) + " s < 1 s)");
}

// 2. tuple_sequence(5,4) equals the sixteen frozen words, in order.
void criterion2() {
    const std::vector<RowWord> expect = {
        {1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 1, 1, 3}, {1, 1, 1, 2, 3},
        {1, 1, 1, 2, 4}, {1, 1, 1, 3, 4}, {1, 1, 2, 3, 4}, {1, 1, 2, 4, 4},
        {1, 1, 3, 4, 4}, {1, 2, 3, 4, 4}, {1, 2, 4, 4, 4}, {1, 3, 4, 4, 4},
        {2, 3, 4, 4, 4}, {2, 4, 4, 4, 4}, {3, 4, 4, 4, 4}, {4, 4, 4, 4, 4}};
    const bool ok = tuple_sequence(5, 4) == expect;
    report(2, ok, "tuple_sequence(5,4) reproduces the sixteen reference words in order");
}

// 3. build_sequence counts match theorem2_bound on five (n,k) pairs with
//    every consecutive strict increase certified exactly, under 60 s.
void criterion3() {
    const struct {
        std::size_t n, k;
        long long expect;
    } cases[] = {{2, 3, 15}, {3, 3, 37}, {3, 5, 91}, {4, 3, 69}, {5, 4, 206}};
    Timer t;
    bool ok = true;
    std::string counts;
    for (const auto& c : cases) {
        std::vector<long long> elems;
        for (std::size_t v = 1; v <= c.k; ++v) elems.push_back(static_cast<long long>(v));
        const auto [mats, rep] = build_sequence(EntrySet(elems), c.n, true);
        ok = ok && rep.matrix_count == c.expect && rep.bound == c.expect &&
             rep.monotone_certified && mats.size() == static_cast<std::size_t>(c.expect);
        counts += (counts.empty() ? "" : ",") + std::to_string(rep.matrix_count);
    }
    const double secs = t.s();
    ok = ok && secs < 60.0;
    report(3, ok,
           "certified monotone sequences of sizes {" + counts +
               "} = {15,37,91,69,206} (" + fmt(secs) + " s < 60 s)");
}

// 4. Closed-form census equals a direct recount for all 2 <= n,k <= 8
//    with max(n,k) > 2, and totals are n(k-1)+1.
void criterion4() {
    bool ok = true;
    int pairs = 0;
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t k = 2; k <= 8; ++k) {
            if (std::max(n, k) <= 2) continue;
            ++pairs;
            std::map<std::size_t, long long> direct;
            long long total = 0;
            for (const RowWord& w : tuple_sequence(n, k)) {
                ++direct[increments(w).t];
                ++total;
            }
            ok = ok && direct == row_census(n, k) &&
                 total == static_cast<long long>(n * (k - 1) + 1);
        }
    report(4, ok,
           "census closed forms match direct recounts on " + std::to_string(pairs) +
               " (n,k) pairs with totals n(k-1)+1");
}

// 5. |Omega_1(A)| = |A| on 20 random sets; |Omega_2({1,2})| = 7; geometric
//    sets {1,2,...,2^(k-1)} give {7,24,58,115} for k = 2..5, under 120 s.
void criterion5() {
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(20250814);
    for (int i = 0; i < 20; ++i) {
        const EntrySet A = random_set(rng, 5, 40);
        ok = ok && compute_omega(A, 1).count == static_cast<long long>(A.size());
    }
    ok = ok && compute_omega(EntrySet({1, 2}), 2).count == 7;
    std::string counts;
    std::vector<long long> geo{1};
    for (std::size_t k = 2; k <= 5; ++k) {
        geo.push_back(1LL << (k - 1));
        const long long c = compute_omega(EntrySet(geo), 2).count;
        ok = ok && c == rk_formula(k);  // {7, 24, 58, 115}
        counts += (counts.empty() ? "" : ",") + std::to_string(c);
    }
    const double secs = t.s();
    ok = ok && secs < 120.0;
    report(5, ok,
           "|Omega_1| = |A| on 20 sets; doubling powers give {" + counts +
               "} = {7,24,58,115} (" + fmt(secs) + " s < 120 s)");
}

// 6. |Omega_2(A)| >= max(|A+A|, |A.A|) on 100 random sets; with zero
//    adjoined and n = 3, |Omega_3| >= max(|3A|, |A^x3|) on 20 sets.
void criterion6() {
    Timer t;
    bool ok = true;
    std::mt19937_64 rng(20250815);
    for (int i = 0; i < 100; ++i) {
        const EntrySet A = random_set(rng, 5, 40);
        const long long c = compute_omega(A, 2).count;
        const long long s = static_cast<long long>(sumset(A, 2).size());
        const long long p = static_cast<long long>(productset(A, 2).size());
        ok = ok && c >= std::max(s, p);
    }
    for (int i = 0; i < 20; ++i) {
        const EntrySet A = random_set(rng, 3, 40);
        const long long c = compute_omega(A.with_zero(true), 3).count;
        const long long s = static_cast<long long>(sumset(A, 3).size());
        const long long p = static_cast<long long>(productset(A, 3).size());
        ok = ok && c >= std::max(s, p);
    }
    report(6, ok,
           "sum/product lower bounds hold on 100 sets at n=2 and 20 zero-adjoined "
           "sets at n=3 (" + fmt(t.s()) + " s)");
}

// 7. A = {1,2,4,8}: chi = pi = 3/4; the dilation family yields >= 12
//    distinct keys; the structured family yields exactly 12, every
//    characteristic polynomial Eisenstein at 2.
void criterion7() {
    const EntrySet A({1, 2, 4, 8});
    const ChiWitness cw = chi(A);
    const PiWitness pw = pi(A);
    bool ok = cw.chi == Rat(3, 4) && pw.pi == Rat(3, 4) && pw.p && *pw.p == 2;

    std::set<IntPoly> dilation;
    if (cw.c)
        for (long long a : A.elements())
            for (long long b : A.elements())
                if (A.contains(*cw.c * b))
                    dilation.insert(perron_key(chi_matrix(A, a, b, *cw.c)).minpoly);
    ok = ok && dilation.size() >= 12;

    std::set<IntPoly> structured;
    bool all_eisenstein = true;
    if (pw.p)
        for (long long a1 : A.elements())
            for (long long a2 : A.elements()) {
                if (a2 % *pw.p != 0) continue;
                const IntMatrix M = eisenstein_matrix(*pw.p, *pw.c, *pw.d, {a1, a2});
                const IntPoly f = charpoly(M);
                all_eisenstein = all_eisenstein && eisenstein_check(*pw.p, f);
                structured.insert(perron_key(M).minpoly);
            }
    ok = ok && structured.size() == 12 && all_eisenstein;
    report(7, ok,
           "chi = pi = 3/4 on {1,2,4,8}; dilation family " +
               std::to_string(dilation.size()) + " >= 12 keys; structured family " +
               std::to_string(structured.size()) + " = 12 keys, all Eisenstein at 2");
}

// 8. companion_charpoly matches the determinant on 100 random instances
//    (2 <= n <= 7); the sign-alternating form mismatches on the all-ones
//    cubic and the mismatch is reported.
void criterion8() {
    const auto checks = companion_polynomial_identity(20250816, 100);
    bool ok = checks.size() == 2 && checks[0].pass && checks[1].pass;
    const std::vector<Int> ones{1, 1, 1};
    const IntPoly det = charpoly(companion_matrix(1, 1, ones));
    const IntPoly alt = companion_charpoly_alternating(1, 1, ones);
    ok = ok && det == companion_charpoly(1, 1, ones) && alt != det;
    report(8, ok,
           "closed form = determinant on 100 instances; alternating form gives " +
               alt.str() + " vs " + det.str() + " and the mismatch is reported");
}

// 9. Randomized property suites: single-entry monotonicity (200, dims
//    2-4), row-sum dominance (100), exchange monotonicity (100), and
//    exact-vs-float agreement on all 2-3 subsets of {1..5} - all 100%.
void criterion9() {
    bool ok = true;
    std::string tallies;
    for (const auto& checks :
         {single_entry_monotonicity(20250817, 200), row_sum_dominance(20250818, 100),
          exchange_monotonicity(20250819, 100), exact_float_agreement()}) {
        for (const auto& c : checks) {
            ok = ok && c.pass;
            tallies += (tallies.empty() ? "" : ", ") + c.actual;
        }
    }
    report(9, ok, "property suites passed " + tallies);
}

// 10. Exact omega on n = 3, A = {1,2,3} (19683 matrices) in < 10 s
//     single-threaded; CLI rk (k=3, range 12) with 4 workers is >= 2x
//     faster than 1 worker with byte-identical reports.
void criterion10() {
    Timer t;
    OmegaOptions single;
    single.workers = 1;
    const OmegaReport rep = compute_omega(EntrySet({1, 2, 3}), 3, single);
    const double exact_secs = t.s();
    bool ok = rep.matrices_enumerated == 19683 && exact_secs < 10.0;

    const std::string rk_args = "rk --k 3 --range 12 --no-timing --workers ";
    const CliRun w1 = run_cli(rk_args + "1");
    const CliRun w4 = run_cli(rk_args + "4");
    const bool identical =
        w1.exit_code == 0 && w4.exit_code == 0 && !w1.out.empty() && w1.out == w4.out;
    const double speedup = w1.seconds / std::max(w4.seconds, 1e-9);
    ok = ok && identical && speedup >= 2.0;
    report(10, ok,
           "exact n=3 census of 19683 matrices in " + fmt(exact_secs) +
               " s < 10 s; 4-worker rk speedup " + fmt(speedup) + "x (need >= 2x), " +
               (identical ? "reports byte-identical" : "reports differ") +
               " [hardware_concurrency=" +
               std::to_string(std::thread::hardware_concurrency()) + "]");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::printf("usage: acceptance <path-to-omega-cli>\n");
        return 2;
    }
    g_cli = argv[1];
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d of 10 criteria failed\n", g_failures);
    return 1;
}
