#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega/constructions.hpp"
#include "omega/matrix.hpp"
#include "omega/report.hpp"
#include "omega/spectral.hpp"

namespace omega {

enum class OmegaMode { Exact, Float };

// How much duplicate work the scan avoids.  Canonical additionally skips
// matrices that are not the lexicographically least member of their
// permutation-similarity/transpose orbit (n <= 4; larger n fall back to
// the characteristic-polynomial level).  None extracts a key per matrix
// with no sharing at all; it exists to cross-check the faster levels.
enum class DedupLevel { None, Charpoly, Canonical };

struct OmegaOptions {
    OmegaMode mode = OmegaMode::Exact;
    DedupLevel dedup = DedupLevel::Canonical;
    unsigned workers = 1;
    long long budget = 100000000;  // matrices per call
};

struct BudgetExceeded : std::runtime_error {
    Int required;
    BudgetExceeded(Int req, long long budget)
        : std::runtime_error("enumeration needs " + req.get_str() +
                             " matrices, over the budget " +
                             std::to_string(budget)),
          required(std::move(req)) {}
};

struct OmegaReport {
    EntrySet A;
    std::size_t n = 0;
    OmegaMode mode = OmegaMode::Exact;
    long long count = 0;                // |Omega_n(A)|
    std::vector<PerronKey> keys;        // sorted by minimal polynomial; exact mode
    std::vector<double> values_float;   // cluster representatives; float mode
    long long matrices_enumerated = 0;
    long long distinct_charpolys = 0;
    double elapsed_ms = 0.0;
};

// The set of spectral radii over all n x n matrices with entries drawn
// from A (plus 0 when the set carries it).  Exact mode identifies each
// radius by the minimal polynomial of the Perron root; float mode sorts
// approximate radii and merges values closer than a 1e-9 relative gap.
OmegaReport compute_omega(const EntrySet& A, std::size_t n, const OmegaOptions& opts);
OmegaReport compute_omega(const EntrySet& A, std::size_t n,
                  OmegaMode mode = OmegaMode::Exact);

// n-fold sumset {a_1 + ... + a_n} and product set {a_1 * ... * a_n}.
std::set<Int> sumset(const EntrySet& A, std::size_t n);
std::set<Int> productset(const EntrySet& A, std::size_t n);

// Lexicographically least entry sequence over all P*M*P^T and their
// transposes; the spectral radius is invariant across the orbit.
IntMatrix canonical_class(const IntMatrix& M);

struct BoundsReport {
    EntrySet A;
    std::size_t n = 0;
    long long omega_count = 0;       // |Omega_n(A)|
    long long omega_zero_count = 0;  // |Omega_n(A union {0})|
    long long sumset_size = 0;       // |nA|
    long long productset_size = 0;   // |A^(xn)|
    Rat chi_bound;                   // chi * |A|^2
    Rat pi_bound;                    // pi * |A|^(n-1)
    std::optional<long long> monotone_bound;  // sequence bound when (n,|A|) admits it
    std::vector<Check> checks;
};

// Computes the radius counts with and without zero, the sumset/product-set
// sizes, the dilation and prime-witness bounds, and the monotone-sequence
// bound, then checks every inequality that applies.
BoundsReport verify_bounds(const EntrySet& A, std::size_t n,
                           const OmegaOptions& opts = {});

// (2k^3 - k^2 + k)/2 = k*T(k) + (k-1)*T(k-1) with T triangular numbers.
long long rk_formula(std::size_t k);

// Entries form a geometric progression (constant exact ratio).
bool is_geometric(const EntrySet& A);

struct SearchResult {
    std::size_t k = 0;
    long long range_max = 0;
    long long minimum = 0;              // min |Omega_2(A)| over the search space
    std::vector<EntrySet> witnesses;    // every minimizing set, sorted
    long long formula_value = 0;        // rk_formula(k)
    long long sets_examined = 0;        // gcd-1 k-subsets scanned
    bool geometric_achieves_minimum = false;
    double elapsed_ms = 0.0;
};

// Minimizes |Omega_2(A)| over all k-subsets of {1..range_max} with gcd 1
// (scaling a set leaves the count unchanged, so one representative per
// dilation class suffices).
SearchResult rk_search(std::size_t k, long long range_max,
                       const OmegaOptions& opts = {});

struct Conj4Report {
    std::size_t k = 0;
    long long count = 0;          // |Omega_2(B union {0})|
    long long formula_value = 0;  // rk_formula(k)
    bool holds = false;           // count < formula_value
    std::string note;
};

// Compares the zero-adjoined two-by-two radius count of a (k-1)-element
// set against the k-element minimum formula.  Reports the comparison
// only; it is a conjecture, not a theorem.
Conj4Report conjecture4_check(const EntrySet& B, std::size_t k,
                              const OmegaOptions& opts = {});

}  // namespace omega
