#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "patmat/matrix.hpp"
#include "patmat/permutation.hpp"

namespace patmat {

// Visit every sigma-avoiding permutation of {1..n} once, in lexicographic
// order. Backtrackers extend prefixes and drop a prefix as soon as it
// contains sigma, since containment survives extension.
void for_each_avoiding(int n, const Permutation& sigma,
                       const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_avoiding(int n, const Permutation& sigma);
unsigned long long count_avoiding(int n, const Permutation& sigma);

// Exact Catalan number binom(2n,n)/(n+1) via the product recurrence.
// catalan() covers n <= 36 in 64 bits; catalan_decimal() has no width
// limit and returns the decimal digits.
unsigned long long catalan(int n);
std::string catalan_decimal(int n);

// Number of permutation matrices dominated by the square matrix A, by
// inclusion-exclusion over column subsets with packed rows. Accepts
// n <= 30 (resource_error beyond); the result must fit in 64 bits.
unsigned long long permanent(const BinaryMatrix& a);

struct AvoidingPermanentReport {
    unsigned long long value = 0;
    unsigned long long witness_count = 0; // equals value for a 0/1 matrix
    std::optional<std::vector<Permutation>> witnesses;
};

// Number of sigma-avoiding permutations dominated by A, by row-order
// backtracking with prefix avoidance pruning. Witnesses (in lexicographic
// order) are collected only when asked.
AvoidingPermanentReport avoiding_permanent(const BinaryMatrix& a,
                                           const Permutation& sigma,
                                           bool collect_witnesses = false);

// True iff every permutation dominated by A avoids sigma.
bool is_sigma_permutation_avoiding(const BinaryMatrix& a,
                                   const Permutation& sigma);

// True iff every 1 of A lies on some dominated permutation matrix.
// Requires a square nonzero matrix (domain_error otherwise).
bool is_total_support(const BinaryMatrix& a);

// True iff deleting any one row and any one column leaves a matrix that
// still dominates a permutation matrix. Same domain requirements.
bool is_fully_indecomposable(const BinaryMatrix& a);

bool is_grassmannian(const Permutation& pi);         // at most one descent
bool is_reverse_grassmannian(const Permutation& pi); // at most one ascent

// Lexicographically least sigma-avoiding permutation of {1..n} containing
// sub as a subsequence, or nullopt when no extension exists. sub must hold
// distinct in-range values and itself avoid sigma (domain_error otherwise).
std::optional<Permutation> extend_avoiding(const std::vector<int>& sub, int n,
                                           const Permutation& sigma);

} // namespace patmat
