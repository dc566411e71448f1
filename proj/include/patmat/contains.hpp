#pragma once

#include <span>

#include "patmat/matrix.hpp"
#include "patmat/permutation.hpp"

namespace patmat {

// True iff rows t_1<...<t_k and columns c_1<...<c_k exist with
// A[t_i, c_{p_i}] = 1 for every i. Generic backtracking: rows ascending,
// pattern rows matched in order, candidate columns ascending, pruned when
// the remaining rows cannot host the remaining pattern rows. Patterns
// longer than min(rows, cols) are never contained.
bool contains_pattern(const BinaryMatrix& a, const Permutation& sigma);

// Length of the longest strictly increasing chain of 1s (rows and columns
// both strictly increasing). A avoids 12...k exactly when the result is
// below k. Row-sweep dynamic program over per-column best chain lengths.
int longest_increasing_chain(const BinaryMatrix& a);

// Specialized scan equivalent to contains_pattern(a, 312): each 1 is tried
// as the '3'; precomputed per-column next-1-below and lowest-1 tables
// answer whether a 1 below-left has a later 1 below it in a column
// strictly between.
bool contains_312(const BinaryMatrix& a);

// Same answer as contains_pattern, but routes identity patterns to the
// chain DP and every length-2/length-3 pattern to the 312 scan through row
// and column reversals. Used by the saturation loops and the oracle.
bool contains_pattern_fast(const BinaryMatrix& a, const Permutation& sigma);

// Pattern containment for a sequence of distinct values (a permutation or
// a partial one): positions i_1<...<i_k whose values are ordered like
// sigma.
bool sequence_contains_pattern(std::span<const int> seq,
                               const Permutation& sigma);

// True iff some containment of sigma ends exactly at the last element of
// seq. Lets enumeration prune incrementally: a freshly appended element is
// the only place a new containment can finish.
bool sequence_gains_pattern_at_back(std::span<const int> seq,
                                    const Permutation& sigma);

} // namespace patmat
