#pragma once

// Hand-checked reference data shared by the test suites. Matrices are
// written as row strings ('0'/'1', top row first); walk cells are listed
// 1-based as (row, col).

#include <string>
#include <utility>
#include <vector>

#include "patmat/extremal.hpp"
#include "patmat/matrix.hpp"
#include "patmat/zigzag.hpp"

namespace fixtures {

inline patmat::BinaryMatrix matrix(const std::vector<std::string>& rows) {
    std::string text;
    for (const auto& row : rows) {
        text += row;
        text += '\n';
    }
    return patmat::parse_matrix(text);
}

inline patmat::ZigzagPath lr_path(
    const std::vector<std::pair<int, int>>& cells) {
    patmat::ZigzagPath path;
    path.orientation = patmat::PathOrientation::LR;
    for (auto [r, c] : cells) {
        path.cells.push_back(patmat::Position{r, c});
    }
    path.complete = patmat::path_spans_own_box(path);
    return path;
}

// The 3x3 matrix of the pattern 312.
inline const std::vector<std::string> pattern_312_rows = {
    "001",
    "100",
    "010",
};

// J_4 = sum of these four permutation matrices; each word avoids both
// 123 and 312 and has at most one ascent.
inline const std::vector<std::string> j4_factor_words = {
    "4321",
    "3214",
    "2143",
    "1432",
};

// 8x8 antichain with 15 = 8+8-1 ones, a maximal 12-avoiding matrix.
inline const std::vector<std::string> antichain_max_8x8 = {
    "00000001",
    "00000001",
    "00000111",
    "00000100",
    "00111100",
    "00100000",
    "11100000",
    "10000000",
};

// Three 6x6 matrices with 20 = 2(6+6-2) ones each, maximal 123-avoiding,
// each a union of two right-to-left zigzag walks.
inline const std::vector<std::string> stacked_walks_6x6_a = {
    "000111",
    "001111",
    "001110",
    "011100",
    "111100",
    "111000",
};
inline const std::vector<std::string> stacked_walks_6x6_b = {
    "111111",
    "100011",
    "100110",
    "101100",
    "101000",
    "111000",
};
inline const std::vector<std::string> stacked_walks_6x6_c = {
    "001111",
    "011011",
    "010010",
    "110110",
    "100100",
    "111100",
};

// Expected peel of stacked_walks_6x6_a: the outer walk (11 cells), then
// the inner one (9 cells).
inline const std::vector<std::pair<int, int>> stacked_a_walk0 = {
    {1, 6}, {1, 5}, {1, 4}, {2, 4}, {2, 3}, {3, 3},
    {4, 3}, {4, 2}, {5, 2}, {5, 1}, {6, 1},
};
inline const std::vector<std::pair<int, int>> stacked_a_walk1 = {
    {2, 6}, {2, 5}, {3, 5}, {3, 4}, {4, 4}, {5, 4}, {5, 3}, {6, 3}, {6, 2},
};

// 6x8 matrix with 33 = 3(6+8-3) ones, maximal 1234-avoiding.
inline const std::vector<std::string> chain4_max_6x8 = {
    "00000111",
    "00001111",
    "01111111",
    "11111111",
    "11111110",
    "11110000",
};

// 8x8 matrix with 48 = 4(8+8-4) ones, maximal 12345-avoiding; it is not
// a union of shifted copies of one walk, yet still peels into complete
// zigzag walks of lengths 15, 13, 11, 9.
inline const std::vector<std::string> chain5_max_8x8 = {
    "11111111",
    "10001111",
    "10111111",
    "10101101",
    "11111011",
    "11110110",
    "11101100",
    "11111000",
};

// 8x8 matrix with 48 ones avoiding the rotation pattern 51234.
inline const std::vector<std::string> rotation5_max_8x8 = {
    "11111111",
    "00011111",
    "00111111",
    "01111111",
    "11111101",
    "11111001",
    "11110001",
    "11100001",
};

// Maximal 312-avoiding matrices: four 5x5 with 16 = 2(5+5-2) ones and one
// 6x6 with 20 ones.
inline const std::vector<std::vector<std::string>> max312_5x5 = {
    {"11000", "11000", "11000", "11111", "11111"},
    {"11111", "00011", "00011", "00011", "11111"},
    {"11111", "11111", "10001", "10001", "10001"},
    {"11110", "01110", "11010", "10011", "10011"},
};
inline const std::vector<std::string> max312_6x6 = {
    "111100",
    "011100",
    "110100",
    "100111",
    "100111",
    "100001",
};

// 8x10 matrix with 32 = 2(8+10-2) ones, maximal 312-avoiding.
inline const std::vector<std::string> max312_8x10 = {
    "1111111111",
    "0000000111",
    "0000001101",
    "0000111001",
    "0001100001",
    "0011000001",
    "0010000001",
    "1110000001",
};

// A complete 9x12 left-to-right walk together with its crucial ones (the
// right-then-down turns) and the corner ones they induce one step
// down-left.
inline const std::vector<std::pair<int, int>> walk_9x12_cells = {
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4},  {2, 5},  {2, 6},
    {3, 6}, {4, 6}, {4, 7}, {4, 8}, {5, 8},  {5, 9},  {6, 9},
    {7, 9}, {7, 10}, {8, 10}, {8, 11}, {8, 12}, {9, 12},
};
inline const std::vector<std::pair<int, int>> walk_9x12_crucials = {
    {1, 4}, {2, 6}, {4, 8}, {5, 9}, {7, 10}, {8, 12},
};
inline const std::vector<std::pair<int, int>> walk_9x12_corners = {
    {2, 3}, {3, 5}, {5, 7}, {6, 8}, {8, 9}, {9, 11},
};

// A complete 12x12 left-to-right walk and the vertical shadows of its
// crucial ones; the shadow construction adds the shadows plus the bottom
// row (columns 1..n-1), reaching 44 = 2(12+12-2) ones.
inline const std::vector<std::pair<int, int>> shadow_walk_12x12_cells = {
    {1, 1}, {1, 2}, {1, 3}, {1, 4},  {1, 5},  {2, 5},  {3, 5},  {4, 5},
    {4, 6}, {4, 7}, {4, 8}, {5, 8},  {6, 8},  {6, 9},  {6, 10}, {7, 10},
    {8, 10}, {9, 10}, {9, 11}, {9, 12}, {10, 12}, {11, 12}, {12, 12},
};
inline const std::vector<std::pair<int, int>> shadow_12x12_shadow_cells = {
    {2, 4}, {3, 4}, {4, 4}, {5, 7}, {6, 7},
    {7, 9}, {8, 9}, {9, 9}, {10, 11}, {11, 11},
};

// A 10x10 build: initial complete walk, a move script (retire = true is
// the retirement move, otherwise q is the split column of the active
// instance), and the resulting matrix with 36 = 2(10+10-2) ones.
inline const std::vector<std::pair<int, int>> build_walk_10x10_cells = {
    {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 4},  {3, 4},  {3, 5},
    {3, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7},  {6, 8},  {7, 8},
    {8, 8}, {8, 9}, {8, 10}, {9, 10}, {10, 10},
};
inline const std::vector<patmat::BuildMove> build_script_10x10 = {
    {false, 5}, {false, 4}, {false, 2}, {true, 0}, {true, 0}, {false, 2},
    {false, 3}, {true, 0},  {true, 0},  {true, 0}, {false, 2}, {true, 0},
    {false, 2}, {true, 0},  {true, 0},  {false, 2},
};
inline const std::vector<std::string> build_final_10x10 = {
    "1111000000",
    "0111000000",
    "0101111000",
    "0000111000",
    "0000101000",
    "0000101100",
    "0000001100",
    "0000001111",
    "0000001111",
    "1101101001",
};

// 5x5 matrix whose permanent is 12 and which avoids 312, with 16 ones.
inline const std::vector<std::string> permanent12_5x5 = {
    "11100",
    "11110",
    "10111",
    "10011",
    "10001",
};

} // namespace fixtures
