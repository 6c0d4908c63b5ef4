#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omega/constructions.hpp"
#include "omega/matrix.hpp"

namespace omega {

// Length-n word of 1-based indices into an entry set.  Words produced by
// tuple_sequence are nondecreasing with consecutive differences in {0,1,2}
// and at most one difference of 2; exchange variants are permutations of
// such words.
using RowWord = std::vector<long long>;

struct IncrementInfo {
    std::size_t t = 0;                   // number of ascents w[j] < w[j+1]
    std::vector<std::size_t> positions;  // 1-based ascent positions j
    bool has_two = false;                // some ascent has height 2
    std::size_t two_position = 0;        // its position, when has_two
};

IncrementInfo increments(const RowWord& w);

// The canonical walk from the all-ones word to the all-k word: if some
// ascent has height 2 at (r,r+1), raise position r; otherwise raise the
// rightmost entry below k.  Length is exactly 1 + n(k-1).
std::vector<RowWord> tuple_sequence(std::size_t n, std::size_t k);

// Closed-form histogram: ascent count t -> number of words of
// tuple_sequence(n,k) with t ascents.  Cross-checked internally against a
// direct census of the generated words.  Requires n,k > 1, max(n,k) > 2.
std::map<std::size_t, long long> row_census(std::size_t n, std::size_t k);

// Chain of row variants of a nondecreasing word w (indices into A) placed
// as row r of the block matrix shape used by build_sequence.  The first
// element is w; each later element differs from its predecessor by one
// transposition that swaps a smaller entry at a position with larger
// Perron-vector weight into a position with smaller weight, so each step
// strictly raises the spectral radius.  A word with t ascents yields t
// exchanges (t+1 rows).
std::vector<RowWord> exchange_chain(const RowWord& w, std::size_t r,
                                    const EntrySet& A);

// Number of matrices the full procedure emits; a lower bound for the
// number of distinct spectral radii over n x n matrices with entries in a
// k-element set.  Requires n,k > 1, max(n,k) > 2.
long long theorem2_bound(std::size_t n, std::size_t k);

// sum_{t=1}^{m-2} (t+1)^2 = (m-1)m(2m-1)/6 - 1, for m > 2.
long long sum_squares_identity(long long m);

struct SequenceReport {
    std::size_t n = 0, k = 0;
    long long tuple_count = 0;
    long long matrix_count = 0;
    long long bound = 0;           // theorem2_bound(n, k)
    bool monotone_certified = false;
    std::map<std::size_t, long long> census;
    std::vector<std::string> notes;  // structural/certification violations
};

// The full monotone matrix sequence: start with every row equal to the
// first word; for each successive word replace rows top-down, emitting
// every exchange variant along the way, exchange the last row, then jump
// to the all-rows-equal matrix.  Emits theorem2_bound(n,|A|) matrices
// whose spectral radii strictly increase.  When certify is set, every
// consecutive pair is proven strictly increasing by exact comparison and
// every step is checked structurally (single-entry increase, transposition
// meeting the Perron-weight condition, or block replacement raising the
// row sum); violations are listed in the report notes.
std::pair<std::vector<IntMatrix>, SequenceReport> build_sequence(
    const EntrySet& A, std::size_t n, bool certify = true);

}  // namespace omega
