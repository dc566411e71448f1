#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "patmat/matrix.hpp"
#include "patmat/permutation.hpp"
#include "patmat/zigzag.hpp"

namespace patmat {

// Retained left-justified cell counts per row: row i keeps its first e_i
// cells, with e nondecreasing and every e_i <= n.
struct StaircaseProfile {
    int m = 0;
    int n = 0;
    std::vector<long long> e;
};

// Upper bound on the 1s of a 12-avoiding filling of the staircase:
// max over i of e_i + m - i (1-based i). Throws domain_error when the
// profile invariants fail.
long long staircase_max_ones(const StaircaseProfile& profile);

// Largest 1-count of an m x n matrix avoiding 12...k: m+n-1 for k=2,
// (k-1)(m+n-(k-1)) for k >= 3. Throws domain_error unless 2 <= k <= min(m,n).
long long max_ones_identity_avoiding(int m, int n, int k);

// Largest 1-count of an m x n matrix avoiding 312: 2(m+n-2) when both
// dimensions are >= 2, m*n when one dimension is 1 (no length-3 pattern
// fits a single row or column).
long long max_ones_312_avoiding(int m, int n);

// Closed form for the largest sigma-avoiding 1-count when one is known.
// The bool is true when the value is conjectured rather than proven (the
// k,1,...,k-1 rotations with k >= 4). Covers: patterns longer than
// min(m,n) (everything avoids, m*n), length 1 (0), length 2 (m+n-1), all
// length-3 patterns, identity and reverse-identity of any length, and the
// k-first rotations. Returns nullopt otherwise.
std::optional<std::pair<long long, bool>>
max_ones_formula(int m, int n, const Permutation& sigma);

// 12...k-avoiding m x n matrix attaining (k-1)(m+n-(k-1)) ones: the union
// of k-1 southeast diagonal shifts of one full anti-staircase walk.
// Requires m,n >= k >= 2.
BinaryMatrix construct_canonical_identity_avoiding(int m, int n, int k);

// Flips 0s to 1s while the matrix keeps avoiding sigma, visiting the zero
// cells in a seed-shuffled order, until no legal flip remains. The input
// must avoid sigma (domain_error otherwise). Deterministic per
// (a, sigma, choice_seed).
BinaryMatrix greedy_saturate(const BinaryMatrix& a, const Permutation& sigma,
                             std::uint64_t choice_seed);

// True iff a avoids sigma and every single 0->1 flip creates sigma.
bool validate_maximal(const BinaryMatrix& a, const Permutation& sigma);

// Splits a 12...k-avoiding matrix with exactly (k-1)(m+n-(k-1)) ones into
// k-1 disjoint RL walks of lengths m+n-1, m+n-3, ..., m+n-(2k-3): walk j
// starts at the top-right of the residual (rows and columns j+1 onward)
// and repeatedly goes as far left as possible, then as far down as
// possible. Throws domain_error when the precondition fails and
// structural_error (carrying the stuck cell) if a walk cannot finish.
std::vector<ZigzagPath> peel_zigzag_decomposition(const BinaryMatrix& a,
                                                  int k);

// One step of the recursive 312 builder: either retire the bottom row
// (place a 1 at the instance's (height-1, 1)) or pick an interior column q
// (1-based, 2 <= q <= width-1) and place a 1 at the instance's (height, q).
struct BuildMove {
    bool retire = false;
    int q = 0;

    friend bool operator==(const BuildMove&, const BuildMove&) = default;
};

// Builds a maximal 312-avoiding m x n matrix (2(m+n-2) ones) around the
// given complete LR walk, which must begin (1,1),(1,2) and end
// (m-1,n),(m,n). Split choices are drawn from choice_seed.
BinaryMatrix construct_312_maximal(int m, int n, const ZigzagPath& path,
                                   std::uint64_t choice_seed);

// Same builder with the move at every expansion step scripted instead of
// seeded; moves are consumed in depth-first order (left submatrix first).
// Throws domain_error if a scripted move is illegal or the count is off.
BinaryMatrix construct_312_maximal_scripted(int m, int n,
                                            const ZigzagPath& path,
                                            std::span<const BuildMove> moves);

// Deterministic maximal 312-avoiding matrix: the walk, one shadow column
// hanging below-left of each right-then-down turn, and the bottom row
// filled through column n-1. Same path precondition as the seeded builder.
BinaryMatrix construct_312_shadow(int m, int n, const ZigzagPath& path);

// The n rotations (n,...,1), (n-1,...,1,n), ..., (1,n,...,2): their
// permutation matrices sum to the all-ones matrix, and each avoids both
// 123 and 312 and has at most one ascent.
std::vector<Permutation> decompose_Jn(int n);

} // namespace patmat
