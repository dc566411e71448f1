#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "patmat/matrix.hpp"
#include "patmat/permutation.hpp"

namespace patmat {

// Result of an exhaustive scan. witness attains exhaustive_max and avoids
// the pattern; it is the first maximizer in row-bitmask lexicographic
// order, so identical parameters always reproduce it. matrices_scanned
// counts the complete candidate matrices the scan evaluated after pruning.
// The saturation_* fields are filled only by check_conjecture_k1.
struct OracleReport {
    int rows;
    int cols;
    Permutation pattern;
    long long exhaustive_max;
    std::optional<long long> formula_value;
    bool formula_conjectured;
    bool agreement; // formula_value == exhaustive_max, when present
    BinaryMatrix witness;
    unsigned long long matrices_scanned;
    bool saturation_checked = false;
    bool saturation_uniform = true;
    std::optional<BinaryMatrix> sub_bound_maximal;
};

// True maximum one-count over all sigma-avoiding m x n matrices, by
// row-by-row branch and bound: a branch dies once the partial matrix
// contains sigma or once filling every remaining cell cannot beat the
// incumbent. Requires m*n <= 25.
OracleReport brute_max_ones(int m, int n, const Permutation& sigma);

// Visits every maximal sigma-avoiding m x n matrix exactly once, in
// lexicographic order of the tuple of row bitmasks (bit j of a row mask
// is column j). Requires m*n <= 20.
void for_each_maximal(int m, int n, const Permutation& sigma,
                      const std::function<void(const BinaryMatrix&)>& fn);
std::vector<BinaryMatrix> enumerate_maximal(int m, int n,
                                            const Permutation& sigma);

// Tests the conjectured bound (k-1)(m+n-(k-1)) for the rotation pattern
// k,1,2,...,k-1 by exhaustive scan; requires m,n >= k >= 4 and m*n <= 25.
// When m*n <= 16 it also scans every avoiding matrix below the bound and
// flip-checks that none is maximal; a sub-bound maximal matrix is reported
// in sub_bound_maximal, not thrown.
OracleReport check_conjecture_k1(int m, int n, int k);

enum class PermanentConstraint {
    none,
    total_support,
    fully_indecomposable,
    permutation_avoiding,
};

// Exhaustive maximum of the sigma-avoiding permanent over all n x n
// matrices satisfying the constraint. Under permutation_avoiding the
// objective is the ordinary permanent, which coincides with the avoiding
// permanent on that class. Full scan needs n <= 4; n = 5 is allowed only
// with the permutation_avoiding constraint.
OracleReport search_max_avoiding_permanent(int n, const Permutation& sigma,
                                           PermanentConstraint constraint);

} // namespace patmat
