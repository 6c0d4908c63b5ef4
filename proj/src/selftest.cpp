#include "omega/selftest.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "omega/enumerate.hpp"
#include "omega/monotone.hpp"
#include "omega/spectral.hpp"

namespace omega {

namespace {

Check tally(std::string name, int passed, int ran) {
    return Check{std::move(name), std::to_string(ran) + "/" + std::to_string(ran),
                 std::to_string(passed) + "/" + std::to_string(ran), passed == ran};
}

IntMatrix random_positive(std::mt19937_64& rng, int n, int hi) {
    IntMatrix M(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            M.at(i, j) = static_cast<long>(1 + rng() % static_cast<unsigned>(hi));
    return M;
}

}  // namespace

std::vector<Check> single_entry_monotonicity(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    int passed = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        IntMatrix M = random_positive(rng, n, 9);
        IntMatrix raised = M;
        raised.at(static_cast<int>(rng() % static_cast<unsigned>(n)),
                  static_cast<int>(rng() % static_cast<unsigned>(n))) += 1;
        if (rho_cmp(M, raised) == Ordering::LT) ++passed;
    }
    return {tally("single raised entry raises the radius", passed, trials)};
}

std::vector<Check> row_sum_dominance(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    int passed = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const int r = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        // common bottom row with sum s, top rows share the sum s + d
        std::vector<long> bottom(static_cast<std::size_t>(n));
        long s = 0;
        for (auto& v : bottom) {
            v = static_cast<long>(1 + rng() % 5);
            s += v;
        }
        const long target = s + static_cast<long>(1 + rng() % 5);
        IntMatrix M(n);
        for (int i = 0; i < r; ++i) {
            std::vector<long> row(static_cast<std::size_t>(n), 1);
            for (long rest = target - n; rest > 0; --rest)
                ++row[rng() % static_cast<unsigned>(n)];
            for (int j = 0; j < n; ++j) M.at(i, j) = row[static_cast<std::size_t>(j)];
        }
        for (int i = r; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = bottom[static_cast<std::size_t>(j)];
        const RealVector v = perron_vector(M);
        double top_min = v[0], rest_max = v[static_cast<std::size_t>(r)];
        for (int i = 1; i < r; ++i) top_min = std::min(top_min, v[static_cast<std::size_t>(i)]);
        for (int i = r; i < n; ++i) rest_max = std::max(rest_max, v[static_cast<std::size_t>(i)]);
        if (top_min > rest_max + 1e-12) ++passed;
    }
    return {tally("larger equal row sums dominate the Perron vector", passed, trials)};
}

std::vector<Check> exchange_monotonicity(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    int passed = 0, ran = 0, attempts = 0;
    while (ran < trials && attempts < 50 * trials) {
        ++attempts;
        const int n = 3 + static_cast<int>(rng() % 2);
        IntMatrix M = random_positive(rng, n, 9);
        const RealVector v = perron_vector(M);
        int br = -1, bi = -1, bj = -1;
        for (int r = 0; r < n && br < 0; ++r)
            for (int i = 0; i < n && br < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (M.at(r, i) < M.at(r, j) &&
                        v[static_cast<std::size_t>(i)] >
                            v[static_cast<std::size_t>(j)] + 1e-9) {
                        br = r;
                        bi = i;
                        bj = j;
                        break;
                    }
        if (br < 0) continue;
        ++ran;
        IntMatrix swapped = M;
        std::swap(swapped.at(br, bi), swapped.at(br, bj));
        if (rho_cmp(M, swapped) == Ordering::LT) ++passed;
    }
    return {tally("in-row swap toward the larger Perron entry raises the radius",
                  passed, ran)};
}

std::vector<Check> companion_polynomial_identity(std::uint64_t seed, int trials) {
    std::mt19937_64 rng(seed);
    int passed = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 2 + rng() % 6;
        const Int c(static_cast<long>(1 + rng() % 9));
        const Int d(static_cast<long>(1 + rng() % 9));
        std::vector<Int> a(n);
        for (auto& v : a) v = static_cast<long>(1 + rng() % 9);
        if (charpoly(companion_matrix(c, d, a)) == companion_charpoly(c, d, a))
            ++passed;
    }
    std::vector<Check> out{
        tally("structured companion charpoly matches the closed form", passed, trials)};

    const std::vector<Int> ones{1, 1, 1};
    const IntPoly det = charpoly(companion_matrix(1, 1, ones));
    const IntPoly alt = companion_charpoly_alternating(1, 1, ones);
    out.push_back(Check{"sign-alternating closed form disagrees with the determinant",
                        "different from " + det.str(), alt.str(), alt != det});
    return out;
}

std::vector<Check> census_agreement() {
    int passed = 0, ran = 0;
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t k = 2; k <= 7; ++k) {
            if (std::max(n, k) <= 2) continue;
            ++ran;
            std::map<std::size_t, long long> direct;
            for (const RowWord& w : tuple_sequence(n, k)) ++direct[increments(w).t];
            if (direct == row_census(n, k)) ++passed;
        }
    return {tally("increment census matches a direct recount", passed, ran)};
}

std::vector<Check> exact_float_agreement() {
    int passed = 0, ran = 0;
    for (long long mask = 1; mask < (1 << 5); ++mask) {
        std::vector<long long> elems;
        for (long long v = 1; v <= 5; ++v)
            if (mask & (1LL << (v - 1))) elems.push_back(v);
        if (elems.size() < 2 || elems.size() > 3) continue;
        ++ran;
        const EntrySet A(elems);
        if (compute_omega(A, 2, OmegaMode::Exact).count ==
            compute_omega(A, 2, OmegaMode::Float).count)
            ++passed;
    }
    return {tally("exact and floating radius counts agree at n = 2", passed, ran)};
}

std::vector<Check> run_selftests(std::uint64_t seed) {
    std::vector<Check> all;
    for (const auto& part :
         {single_entry_monotonicity(seed, 200), row_sum_dominance(seed + 1, 100),
          exchange_monotonicity(seed + 2, 100),
          companion_polynomial_identity(seed + 3, 100), census_agreement(),
          exact_float_agreement()})
        all.insert(all.end(), part.begin(), part.end());
    return all;
}

}  // namespace omega
