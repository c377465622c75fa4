#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "size_profile.hpp"

namespace subgrowth {

// Raised when a computation would exceed the desk-scale caps.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Explicit forbidden words over {0..q-1}, written as digit strings.
struct WordSet {
    int alphabet_size = 2;
    std::vector<std::string> forbidden_words;
};

// q in [2,6], word lengths in [1,14], digits < q, no duplicates.
void validate_wordset(const WordSet& ws);

// A forbidden pattern on an arbitrary finite subset of Z.
struct GeneralPattern {
    std::vector<long> support; // strictly increasing after validation
    std::vector<int> values;   // parallel to support
};

struct GeneralPatternSet {
    int alphabet_size = 2;
    std::vector<GeneralPattern> patterns;
};

// supports nonempty, |support| <= 10, coordinates in [-20,20], values < q.
void validate_patternset(GeneralPatternSet& ps); // sorts supports in place

// Number of length-n words with no forbidden word as a contiguous block.
// Depth-first extension with incremental suffix checks; requires 1 <= n <= 30
// and q^n <= 1e8 (ResourceLimitError otherwise).
std::uint64_t count_admissible_words(const WordSet& ws, int n);

// Exact counts L(1..n_max) via the sliding-window automaton (path counting)
// for n >= max_len-1 and budgeted DFS below; n_max <= 25.
std::vector<std::uint64_t> admissible_word_counts(const WordSet& ws, int n_max);

// Spectral radius of the sliding-window automaton: states are admissible
// (m-1)-windows, edges are admissible m-windows. Per-component power iteration
// with Collatz-Wielandt bounds; 0 when no cycle survives.
double growth_transfer_matrix(const WordSet& ws);

// entry 0: L(1) >= beta; entry n >= 1: L(n+1) >= beta * L(n).
std::vector<bool> check_ratio_lemma(const WordSet& ws, double beta, int n_max);

// L(i+j) <= L(i) * L(j) for all i + j <= counts.size().
bool check_submultiplicative(const std::vector<std::uint64_t>& counts);

// Assignments support -> letters such that no translate of any forbidden
// pattern lies inside the support with matching values. |support| <= 22.
std::uint64_t count_admissible_on_support(const GeneralPatternSet& ps,
                                          std::vector<long> support);

// Words become patterns on {0..len-1}; pattern invariants still apply.
GeneralPatternSet to_patterns(const WordSet& ws);

// One finite FamilyTerm per distinct size with the exact count.
SizeProfile profile_of(const WordSet& ws);
SizeProfile profile_of(const GeneralPatternSet& ps);

struct OracleReport {
    std::vector<std::uint64_t> counts; // L(1..n_max)
    double spectral_radius = 0.0;
    std::vector<bool> ratio_ok;
    bool submultiplicative_ok = false;
    double beta_used = 0.0;
};

OracleReport oracle_report(const WordSet& ws, int n_max, double beta);

} // namespace subgrowth
