#include "omega/monotone.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "omega/spectral.hpp"

namespace omega {

namespace {

// maximal runs of equal entries, 1-based inclusive bounds
struct Block {
    std::size_t start, end;
};

std::vector<Block> blocks_of(const RowWord& w) {
    std::vector<Block> blocks;
    std::size_t start = 1;
    for (std::size_t j = 1; j <= w.size(); ++j) {
        if (j == w.size() || w[j] != w[j - 1]) {
            blocks.push_back({start, j});
            start = j + 1;
        }
    }
    return blocks;
}

}  // namespace

IncrementInfo increments(const RowWord& w) {
    IncrementInfo info;
    for (std::size_t j = 0; j + 1 < w.size(); ++j) {
        long long d = w[j + 1] - w[j];
        if (d > 0) {
            ++info.t;
            info.positions.push_back(j + 1);
            if (d == 2 && !info.has_two) {
                info.has_two = true;
                info.two_position = j + 1;
            }
        }
    }
    return info;
}

std::vector<RowWord> tuple_sequence(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("tuple_sequence: n and k must be positive");
    const long long kk = static_cast<long long>(k);
    RowWord w(n, 1);
    std::vector<RowWord> out;
    out.reserve(n * (k - 1) + 1);
    out.push_back(w);
    while (w[0] != kk) {  // nondecreasing, so w[0]=k means all entries are k
        std::size_t pos = n;
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (w[j + 1] - w[j] == 2) {
                pos = j;
                break;
            }
        if (pos == n)
            for (std::size_t j = n; j-- > 0;)
                if (w[j] != kk) {
                    pos = j;
                    break;
                }
        ++w[pos];
        out.push_back(w);
    }
    if (out.size() != n * (k - 1) + 1)
        throw std::logic_error("tuple_sequence: unexpected walk length");
    return out;
}

std::map<std::size_t, long long> row_census(std::size_t n, std::size_t k) {
    if (n < 2 || k < 2 || std::max(n, k) < 3)
        throw std::invalid_argument(
            "row_census: requires n > 1, k > 1, and max(n, k) > 2");
    std::map<std::size_t, long long> c;
    const std::size_t m = std::min(n - 2, k - 2);
    c[0] = 2;
    for (std::size_t t = 1; t < m; ++t) c[t] = 2 * static_cast<long long>(t + 1);
    if (m >= 1) {
        c[m] = 2 * static_cast<long long>(m + 1);
        if (k < n) c[m] += static_cast<long long>(n - k) * static_cast<long long>(k - 2);
    }
    const std::size_t tmax = (k < n) ? k - 1 : n - 1;
    c[tmax] = (k < n) ? static_cast<long long>(n - k + 1)
                      : static_cast<long long>(n) * static_cast<long long>(k - n) + 1;

    long long total = 0;
    for (const auto& [t, cnt] : c) total += cnt;
    std::map<std::size_t, long long> direct;
    for (const auto& w : tuple_sequence(n, k)) ++direct[increments(w).t];
    if (direct != c ||
        total != static_cast<long long>(n) * static_cast<long long>(k - 1) + 1)
        throw std::logic_error("row_census: closed form disagrees with the generated words");
    return c;
}

std::vector<RowWord> exchange_chain(const RowWord& w, std::size_t r,
                                    const EntrySet& A) {
    const std::size_t n = w.size();
    if (n == 0) throw std::invalid_argument("exchange_chain: empty word");
    if (r < 1 || r > n)
        throw std::invalid_argument("exchange_chain: row position out of range");
    const long long k = static_cast<long long>(A.size());
    for (std::size_t j = 0; j < n; ++j) {
        if (w[j] < 1 || w[j] > k)
            throw std::invalid_argument("exchange_chain: word index outside the entry set");
        if (j > 0 && w[j] < w[j - 1])
            throw std::invalid_argument("exchange_chain: word must be nondecreasing");
    }

    const std::vector<Block> B = blocks_of(w);
    const std::size_t t = B.size() - 1;  // ascents sit at block boundaries
    std::vector<RowWord> chain{w};
    if (t == 0) return chain;

    RowWord cur = w;
    auto swap_at = [&](std::size_t i, std::size_t j) {  // 1-based positions
        std::swap(cur[i - 1], cur[j - 1]);
        chain.push_back(cur);
    };

    const std::size_t first_ascent = B.front().end;
    const std::size_t last_ascent = B[t - 1].end;

    if (last_ascent < r) {
        // every ascent is left of (r,r+1): move the block ends into
        // position n, rightmost block first; position n's value shrinks
        // while the partner value shrinks faster, so each swap pairs a
        // smaller early entry with a larger late one
        for (std::size_t b = t; b-- > 0;) swap_at(B[b].end, n);
    } else if (first_ascent >= r) {
        // entries 1..r are all equal: swap the first entry with the
        // start of each later block in turn
        for (std::size_t b = 1; b <= t; ++b) swap_at(1, B[b].start);
    } else {
        // ascent at (r,r+1) with earlier ascents: first descend the block
        // ends from r into position n, then swap the first entry with the
        // starts of the blocks right of r, skipping position n (already
        // changed).  This admits t+1 exchanges; the final one is
        // deliberately left out to match the other cases.
        std::size_t bidx = t;
        for (std::size_t b = 0; b < t; ++b)
            if (B[b].end == r) {
                bidx = b;
                break;
            }
        if (bidx == t)
            throw std::invalid_argument(
                "exchange_chain: ascents on both sides of the row position but none at it");
        for (std::size_t b = bidx + 1; b-- > 0;) swap_at(B[b].end, n);
        for (std::size_t b = bidx + 1; b <= t; ++b) {
            if (B[b].start == n) continue;
            swap_at(1, B[b].start);
        }
        if (chain.size() == t + 2) chain.pop_back();
        if (chain.size() != t + 1)
            throw std::logic_error("exchange_chain: unexpected exchange count");
    }
    return chain;
}

long long theorem2_bound(std::size_t n_, std::size_t k_) {
    if (n_ < 2 || k_ < 2 || std::max(n_, k_) < 3)
        throw std::invalid_argument(
            "theorem2_bound: requires n > 1, k > 1, and max(n, k) > 2");
    const long long n = static_cast<long long>(n_);
    const long long k = static_cast<long long>(k_);
    if (k < n)
        return n * (k - 1) * k * (2 * k - 1) / 3 +
               n * (k - 1) * (k - 2) * (n - k) + n * k * (n - k + 1) - n + 1;
    return n * (n - 1) * n * (2 * n - 1) / 3 + n * n * n * (k - n) + n * n - n + 1;
}

long long sum_squares_identity(long long m) {
    if (m <= 2) throw std::invalid_argument("sum_squares_identity: requires m > 2");
    return (m - 1) * m * (2 * m - 1) / 6 - 1;
}

std::pair<std::vector<IntMatrix>, SequenceReport> build_sequence(
    const EntrySet& A, std::size_t n, bool certify) {
    const std::size_t k = A.size();
    if (n < 2 || k < 2 || std::max(n, k) < 3)
        throw std::invalid_argument(
            "build_sequence: requires n > 1, |A| > 1, and max(n, |A|) > 2");

    const std::vector<RowWord> words = tuple_sequence(n, k);
    const std::vector<long long>& vals = A.elements();

    SequenceReport rep;
    rep.n = n;
    rep.k = k;
    rep.tuple_count = static_cast<long long>(words.size());
    rep.bound = theorem2_bound(n, k);
    rep.census = row_census(n, k);

    auto value_row = [&](const RowWord& w) {
        std::vector<long long> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = vals[static_cast<std::size_t>(w[j]) - 1];
        return row;
    };

    std::vector<std::vector<long long>> rows(n, value_row(words[0]));
    auto assemble = [&]() {
        IntMatrix M(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                M.at(i, j) = static_cast<long>(rows[i][j]);
        return M;
    };

    std::vector<IntMatrix> seq;
    seq.push_back(assemble());
    IntPoly prev_cp;
    if (certify) prev_cp = charpoly(seq.back());

    auto note = [&](const std::string& msg) {
        rep.notes.push_back("step " + std::to_string(seq.size() - 1) + ": " + msg);
    };

    enum class Kind { Replace, Exchange, Jump };
    // structural classification of the transition seq[end-2] -> seq[end-1],
    // plus the exact strict-increase certificate
    auto check_step = [&](Kind kind, std::size_t changed_row) {
        if (!certify) return;
        const IntMatrix& a = seq[seq.size() - 2];
        const IntMatrix& b = seq.back();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!A.contains(b.at(i, j).get_si())) {
                    note("entry left the entry set");
                    break;
                }
        switch (kind) {
            case Kind::Replace: {
                int diffs = 0;
                bool increased = true;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (a.at(i, j) != b.at(i, j)) {
                            ++diffs;
                            if (b.at(i, j) < a.at(i, j)) increased = false;
                        }
                if (diffs != 1 || !increased)
                    note("expected a single raised entry");
                break;
            }
            case Kind::Exchange: {
                const std::size_t r0 = changed_row - 1;
                bool others_same = true;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == r0) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        if (a.at(i, j) != b.at(i, j)) others_same = false;
                }
                std::vector<std::size_t> diff;
                for (std::size_t j = 0; j < n; ++j)
                    if (a.at(r0, j) != b.at(r0, j)) diff.push_back(j);
                const bool is_swap =
                    diff.size() == 2 && a.at(r0, diff[0]) == b.at(r0, diff[1]) &&
                    a.at(r0, diff[1]) == b.at(r0, diff[0]);
                if (!others_same || !is_swap) {
                    note("expected a single-row transposition");
                    break;
                }
                if (!(a.at(r0, diff[0]) < a.at(r0, diff[1]))) {
                    note("transposition does not move a smaller entry right");
                    break;
                }
                RealVector v = perron_vector(a);
                if (!(v[diff[0]] > v[diff[1]] + 1e-12))
                    note("Perron weight at the smaller entry is not larger");
                break;
            }
            case Kind::Jump: {
                bool all_equal = true;
                for (std::size_t i = 1; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (b.at(i, j) != b.at(0, j)) all_equal = false;
                const Int snew = b.row_sum(0);
                if (!all_equal || a.max_row_sum() > snew || a.min_row_sum() >= snew)
                    note("expected an all-rows-equal matrix with larger row sum");
                break;
            }
        }
        IntPoly cp = charpoly(b);
        if (rho_cmp_charpoly(prev_cp, cp) != Ordering::LT)
            note("spectral radius did not strictly increase");
        prev_cp = std::move(cp);
    };

    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        const RowWord& low = words[i];
        const RowWord& high = words[i + 1];
        for (std::size_t r = 1; r <= n - 1; ++r) {
            rows[r - 1] = value_row(high);
            seq.push_back(assemble());
            check_step(Kind::Replace, r);
            const auto chain = exchange_chain(high, r, A);
            for (std::size_t c = 1; c < chain.size(); ++c) {
                rows[r - 1] = value_row(chain[c]);
                seq.push_back(assemble());
                check_step(Kind::Exchange, r);
            }
        }
        const auto chain = exchange_chain(low, n, A);
        for (std::size_t c = 1; c < chain.size(); ++c) {
            rows[n - 1] = value_row(chain[c]);
            seq.push_back(assemble());
            check_step(Kind::Exchange, n);
        }
        for (auto& row : rows) row = value_row(high);
        seq.push_back(assemble());
        check_step(Kind::Jump, 0);
    }

    rep.matrix_count = static_cast<long long>(seq.size());
    if (rep.matrix_count != rep.bound)
        rep.notes.push_back("matrix count " + std::to_string(rep.matrix_count) +
                            " differs from the closed-form bound " +
                            std::to_string(rep.bound));
    rep.monotone_certified = certify && rep.notes.empty();
    return {std::move(seq), rep};
}

}  // namespace omega
