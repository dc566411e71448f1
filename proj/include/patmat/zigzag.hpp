#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patmat/errors.hpp"
#include "patmat/matrix.hpp"

namespace patmat {

enum class PathOrientation { RL, LR };

// A monotone staircase walk of 1-cells. RL walks are listed from the
// (1,n) side and step one column left or one row down; LR walks are
// listed from the (1,1) side and step one column right or one row down.
// `complete` records whether the walk spans its bounding box from the
// canonical corner (RL: starts in row 1 and ends in column 1; LR: starts
// at (1,1)); a complete walk over an m x n box has m+n-1 cells.
struct ZigzagPath {
    std::vector<Position> cells;
    PathOrientation orientation = PathOrientation::RL;
    bool complete = false;
};

// Checks the step discipline and, when m and n are given (> 0), the cell
// bounds. Throws domain_error describing the first bad cell.
void validate_path(const ZigzagPath& path, int m = 0, int n = 0);

// True iff the walk spans its own bounding box from the canonical corner.
bool path_spans_own_box(const ZigzagPath& path);

// Orientation header line ("RL" or "LR") followed by one "r,c" cell per
// line, in walk order, no trailing newline.
std::string render_path(const ZigzagPath& path);
ZigzagPath parse_path(const std::string& text);

// m x n matrix holding a 1 exactly on the path cells.
BinaryMatrix matrix_from_path(const ZigzagPath& path, int m, int n);

// If the ones of A form exactly one complete top-right to bottom-left
// zigzag walk (every 1 except the last has a 1 immediately left or
// immediately below, never both), return that walk.
std::optional<ZigzagPath> recognize_zigzag(const BinaryMatrix& a);

// Crucial ones are the right-then-down turn cells of a complete LR walk;
// each corner one sits one row down and one column left of its crucial
// one. The two lists are parallel.
std::pair<std::vector<Position>, std::vector<Position>>
crucial_and_corner_ones(const ZigzagPath& path);

// Seeded complete LR walk from (1,1) to (m,n). When both m,n >= 2 the
// first move is right and the last is down, the shape the 312 builders
// require; the interior moves are shuffled uniformly by the seed.
ZigzagPath random_lr_path(int m, int n, std::uint64_t seed);

// Row lengths of a corner-anchored staircase region of 0s.
struct FerrersShape {
    std::vector<int> row_lengths;
};

// Zero counts strictly northwest (weakly decreasing) and strictly
// southeast (weakly increasing) of a complete RL walk in an m x n box.
std::pair<FerrersShape, FerrersShape> path_zero_shapes(const ZigzagPath& path,
                                                       int m, int n);

} // namespace patmat
