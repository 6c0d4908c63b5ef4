#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "omega/monotone.hpp"
#include "omega/spectral.hpp"

using namespace omega;

namespace {

const EntrySet A6({1, 2, 3, 4, 5, 6});

// map an index chain to value rows for readable comparisons
std::vector<RowWord> values_of(const std::vector<RowWord>& chain,
                               const EntrySet& A) {
    std::vector<RowWord> out;
    for (const auto& w : chain) {
        RowWord v(w.size());
        for (std::size_t j = 0; j < w.size(); ++j)
            v[j] = A.elements()[static_cast<std::size_t>(w[j]) - 1];
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("tuple_sequence frozen walks") {
    std::vector<RowWord> expect54 = {
        {1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 1, 1, 3}, {1, 1, 1, 2, 3},
        {1, 1, 1, 2, 4}, {1, 1, 1, 3, 4}, {1, 1, 2, 3, 4}, {1, 1, 2, 4, 4},
        {1, 1, 3, 4, 4}, {1, 2, 3, 4, 4}, {1, 2, 4, 4, 4}, {1, 3, 4, 4, 4},
        {2, 3, 4, 4, 4}, {2, 4, 4, 4, 4}, {3, 4, 4, 4, 4}, {4, 4, 4, 4, 4}};
    CHECK(tuple_sequence(5, 4) == expect54);

    CHECK(tuple_sequence(1, 4) ==
          std::vector<RowWord>{{1}, {2}, {3}, {4}});
    CHECK(tuple_sequence(3, 2) ==
          std::vector<RowWord>{{1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2}});
    CHECK(tuple_sequence(2, 3) ==
          std::vector<RowWord>{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
    CHECK(tuple_sequence(1, 1) == std::vector<RowWord>{{1}});
    CHECK_THROWS_AS(tuple_sequence(0, 3), std::invalid_argument);
}

TEST_CASE("tuple_sequence invariants for n,k <= 8") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= 8; ++k) {
            auto words = tuple_sequence(n, k);
            CHECK(words.size() == 1 + n * (k - 1));
            for (std::size_t i = 0; i < words.size(); ++i) {
                const auto& w = words[i];
                int twos = 0;
                for (std::size_t j = 0; j + 1 < n; ++j) {
                    long long d = w[j + 1] - w[j];
                    CHECK(d >= 0);
                    CHECK(d <= 2);
                    if (d == 2) ++twos;
                }
                CHECK(twos <= 1);
                CHECK(w.front() >= 1);
                CHECK(w.back() <= static_cast<long long>(k));
                // ascent positions come in one contiguous run
                auto inc = increments(w);
                for (std::size_t p = 1; p < inc.positions.size(); ++p)
                    CHECK(inc.positions[p] == inc.positions[p - 1] + 1);
                if (i > 0) {
                    // exactly one coordinate raised by 1
                    int diffs = 0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (words[i][j] != words[i - 1][j]) {
                            ++diffs;
                            CHECK(words[i][j] == words[i - 1][j] + 1);
                        }
                    CHECK(diffs == 1);
                }
            }
        }
}

TEST_CASE("increments") {
    auto a = increments({1, 1, 1, 1, 1});
    CHECK(a.t == 0);
    CHECK_FALSE(a.has_two);

    auto b = increments({1, 1, 1, 2, 4});
    CHECK(b.t == 2);
    CHECK(b.positions == std::vector<std::size_t>{3, 4});
    CHECK(b.has_two);
    CHECK(b.two_position == 4);

    auto c = increments({1, 2, 3, 4, 4});
    CHECK(c.t == 3);
    CHECK_FALSE(c.has_two);
}

TEST_CASE("row_census closed forms") {
    std::map<std::size_t, long long> e54 = {{0, 2}, {1, 4}, {2, 8}, {3, 2}};
    CHECK(row_census(5, 4) == e54);
    std::map<std::size_t, long long> e23 = {{0, 2}, {1, 3}};
    CHECK(row_census(2, 3) == e23);
    std::map<std::size_t, long long> e33 = {{0, 2}, {1, 4}, {2, 1}};
    CHECK(row_census(3, 3) == e33);

    CHECK_THROWS_AS(row_census(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(row_census(1, 5), std::invalid_argument);

    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t k = 2; k <= 8; ++k) {
            if (std::max(n, k) < 3) continue;
            auto closed = row_census(n, k);
            std::map<std::size_t, long long> direct;
            for (const auto& w : tuple_sequence(n, k)) ++direct[increments(w).t];
            CHECK(closed == direct);
            long long total = 0;
            for (const auto& [t, cnt] : closed) total += cnt;
            CHECK(total == static_cast<long long>(n) * (k - 1) + 1);
        }
}

TEST_CASE("exchange_chain: ascents left of the row position") {
    auto chain = values_of(exchange_chain({3, 4, 5, 6, 6, 6}, 4, A6), A6);
    std::vector<RowWord> expect = {{3, 4, 5, 6, 6, 6},
                                   {3, 4, 6, 6, 6, 5},
                                   {3, 5, 6, 6, 6, 4},
                                   {4, 5, 6, 6, 6, 3}};
    CHECK(chain == expect);
}

TEST_CASE("exchange_chain: leading entries equal through r") {
    std::vector<RowWord> expect = {{3, 3, 3, 4, 5, 6},
                                   {4, 3, 3, 3, 5, 6},
                                   {5, 3, 3, 3, 4, 6},
                                   {6, 3, 3, 3, 4, 5}};
    for (std::size_t r = 1; r <= 3; ++r) {
        auto chain = values_of(exchange_chain({3, 3, 3, 4, 5, 6}, r, A6), A6);
        CHECK(chain == expect);
    }
}

TEST_CASE("exchange_chain: first row position") {
    auto chain = values_of(exchange_chain({2, 3, 4, 6, 6}, 1, A6), A6);
    std::vector<RowWord> expect = {
        {2, 3, 4, 6, 6}, {3, 2, 4, 6, 6}, {4, 2, 3, 6, 6}, {6, 2, 3, 4, 6}};
    CHECK(chain == expect);
}

TEST_CASE("exchange_chain: straddling ascents drop the extra exchange") {
    auto chain = values_of(exchange_chain({1, 1, 2, 3, 4, 6, 6}, 3, A6), A6);
    std::vector<RowWord> expect = {{1, 1, 2, 3, 4, 6, 6},
                                   {1, 1, 6, 3, 4, 6, 2},
                                   {1, 2, 6, 3, 4, 6, 1},
                                   {3, 2, 6, 1, 4, 6, 1},
                                   {4, 2, 6, 1, 3, 6, 1}};
    CHECK(chain == expect);
    CHECK(chain.size() == increments(RowWord{1, 1, 2, 3, 4, 6, 6}).t + 1);
}

TEST_CASE("exchange_chain: ascent ending at position n is not retouched") {
    // ascent at (r,r+1)=(2,3) plus one earlier; the last block starts at n,
    // which phase one already changed, so only t exchanges arise
    auto chain = exchange_chain({1, 2, 3}, 2, EntrySet({1, 2, 3}));
    std::vector<RowWord> expect = {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}};
    CHECK(chain == expect);
}

TEST_CASE("exchange_chain edge cases and rejection") {
    CHECK(exchange_chain({2, 2, 2}, 2, EntrySet({1, 2})) ==
          std::vector<RowWord>{{2, 2, 2}});
    CHECK(exchange_chain({1, 2}, 2, EntrySet({1, 2})) ==
          std::vector<RowWord>{{1, 2}, {2, 1}});
    CHECK(exchange_chain({1, 2}, 1, EntrySet({1, 2})) ==
          std::vector<RowWord>{{1, 2}, {2, 1}});
    CHECK_THROWS_AS(exchange_chain({1, 2}, 3, EntrySet({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(exchange_chain({1, 2}, 0, EntrySet({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(exchange_chain({2, 1}, 1, EntrySet({1, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(exchange_chain({1, 3}, 1, EntrySet({1, 2})),
                    std::invalid_argument);
    // ascents on both sides of r but none at r: no schedule defined
    CHECK_THROWS_AS(exchange_chain({1, 2, 2, 3}, 2, EntrySet({1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("exchange_chain length is t+1 for every generated word and row") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 2; k <= 6; ++k) {
            EntrySet A = [&] {
                std::vector<long long> v(k);
                for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<long long>(j + 1);
                return EntrySet(v);
            }();
            for (const auto& w : tuple_sequence(n, k))
                for (std::size_t r = 1; r <= n; ++r) {
                    auto chain = exchange_chain(w, r, A);
                    CHECK(chain.size() == increments(w).t + 1);
                    // each variant is a permutation of w
                    for (const auto& var : chain) {
                        RowWord sorted = var;
                        std::sort(sorted.begin(), sorted.end());
                        CHECK(sorted == w);
                    }
                    // consecutive variants differ by one transposition
                    for (std::size_t c = 1; c < chain.size(); ++c) {
                        int diffs = 0;
                        for (std::size_t j = 0; j < n; ++j)
                            if (chain[c][j] != chain[c - 1][j]) ++diffs;
                        CHECK(diffs == 2);
                    }
                }
        }
}

TEST_CASE("theorem2_bound") {
    CHECK(theorem2_bound(2, 3) == 15);
    CHECK(theorem2_bound(3, 3) == 37);
    CHECK(theorem2_bound(3, 5) == 91);
    CHECK(theorem2_bound(4, 3) == 69);
    CHECK(theorem2_bound(5, 4) == 206);
    CHECK(theorem2_bound(6, 6) == 691);

    CHECK_THROWS_AS(theorem2_bound(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_bound(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_bound(5, 1), std::invalid_argument);

    // the two branch formulas agree at k = n
    for (long long n = 3; n <= 12; ++n) {
        long long below = n * (n - 1) * n * (2 * n - 1) / 3 +
                          n * (n - 1) * (n - 2) * (n - n) + n * n * (n - n + 1) -
                          n + 1;
        CHECK(theorem2_bound(n, n) == below);
    }

    // never shorter than the naive all-entries walk n^2(k-1)+1
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t k = 2; k <= 12; ++k) {
            if (std::max(n, k) < 3) continue;
            CHECK(theorem2_bound(n, k) >=
                  static_cast<long long>(n) * n * (k - 1) + 1);
        }
}

TEST_CASE("sum_squares_identity") {
    CHECK(sum_squares_identity(3) == 4);
    CHECK(sum_squares_identity(4) == 13);
    CHECK(sum_squares_identity(10) == 284);
    CHECK_THROWS_AS(sum_squares_identity(2), std::invalid_argument);
    for (long long m = 3; m <= 40; ++m) {
        long long direct = 0;
        for (long long t = 1; t <= m - 2; ++t) direct += (t + 1) * (t + 1);
        CHECK(sum_squares_identity(m) == direct);
    }
}

TEST_CASE("build_sequence: certified runs") {
    auto [seq, rep] = build_sequence(EntrySet({1, 2, 3}), 2);
    CHECK(seq.size() == 15);
    CHECK(rep.matrix_count == 15);
    CHECK(rep.bound == 15);
    CHECK(rep.tuple_count == 5);
    CHECK(rep.monotone_certified);
    CHECK(rep.notes.empty());
    CHECK(rep.census == row_census(2, 3));
    CHECK(seq.front() == IntMatrix{{1, 1}, {1, 1}});
    CHECK(seq.back() == IntMatrix{{3, 3}, {3, 3}});

    auto [seq3, rep3] = build_sequence(EntrySet({1, 2, 3}), 3);
    CHECK(seq3.size() == 37);
    CHECK(rep3.monotone_certified);
    INFO((rep3.notes.empty() ? std::string() : rep3.notes.front()));
    CHECK(rep3.notes.empty());

    // k < n branch
    auto [seq2, rep2] = build_sequence(EntrySet({1, 2}), 3);
    CHECK(seq2.size() == 16);
    CHECK(rep2.monotone_certified);

    // non-uniform entry values
    auto [seqv, repv] = build_sequence(EntrySet({2, 3, 5}), 3);
    CHECK(seqv.size() == 37);
    CHECK(repv.monotone_certified);
    CHECK(seqv.front() == IntMatrix{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
    CHECK(seqv.back() == IntMatrix{{5, 5, 5}, {5, 5, 5}, {5, 5, 5}});
    for (const auto& M : seqv)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(EntrySet({2, 3, 5}).contains(M.at(i, j).get_si()));
}

TEST_CASE("build_sequence: spectral radii strictly increase in float") {
    auto [seq, rep] = build_sequence(EntrySet({1, 2, 3, 4}), 3);
    CHECK(seq.size() == theorem2_bound(3, 4));
    CHECK(rep.monotone_certified);
    double prev = rho_float(seq.front());
    for (std::size_t i = 1; i < seq.size(); ++i) {
        double cur = rho_float(seq[i]);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("build_sequence: count matches the bound for n,k <= 6") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 2; k <= 6; ++k) {
            if (std::max(n, k) < 3) continue;
            std::vector<long long> v(k);
            for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<long long>(j + 1);
            auto [seq, rep] = build_sequence(EntrySet(v), n, false);
            CHECK(rep.matrix_count == theorem2_bound(n, k));
            CHECK_FALSE(rep.monotone_certified);  // certification was skipped
        }
}

TEST_CASE("build_sequence: large certified run") {
    auto [seq, rep] = build_sequence(EntrySet({1, 2, 3, 4}), 5);
    CHECK(seq.size() == 206);
    INFO((rep.notes.empty() ? std::string() : rep.notes.front()));
    CHECK(rep.monotone_certified);
}

TEST_CASE("build_sequence rejects out-of-range shapes") {
    CHECK_THROWS_AS(build_sequence(EntrySet({1, 2}), 2), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(EntrySet({1, 2, 3}), 1), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(EntrySet({5}), 4), std::invalid_argument);
}
