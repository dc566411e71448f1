#include "patmat/zigzag.hpp"

#include <algorithm>
#include <random>

namespace patmat {

namespace {

std::string cell_text(Position p) {
    return std::to_string(p.row) + "," + std::to_string(p.col);
}

bool is_step(Position from, Position to, PathOrientation o) {
    if (o == PathOrientation::RL) {
        return (to.row == from.row && to.col == from.col - 1) ||
               (to.row == from.row + 1 && to.col == from.col);
    }
    return (to.row == from.row && to.col == from.col + 1) ||
           (to.row == from.row + 1 && to.col == from.col);
}

} // namespace

void validate_path(const ZigzagPath& path, int m, int n) {
    if (path.cells.empty()) {
        throw domain_error("path has no cells");
    }
    for (std::size_t i = 0; i < path.cells.size(); ++i) {
        Position p = path.cells[i];
        if (p.row < 1 || p.col < 1 || (m > 0 && p.row > m) ||
            (n > 0 && p.col > n)) {
            throw domain_error("path cell " + cell_text(p) +
                               " is out of bounds");
        }
        if (i > 0 && !is_step(path.cells[i - 1], p, path.orientation)) {
            throw domain_error("path breaks at cell " + cell_text(p) +
                               ": not a single left/right-or-down step");
        }
    }
}

bool path_spans_own_box(const ZigzagPath& path) {
    if (path.cells.empty()) {
        return false;
    }
    if (path.orientation == PathOrientation::RL) {
        return path.cells.front().row == 1 && path.cells.back().col == 1;
    }
    return path.cells.front() == Position{1, 1};
}

std::string render_path(const ZigzagPath& path) {
    std::string out = path.orientation == PathOrientation::RL ? "RL" : "LR";
    for (Position p : path.cells) {
        out.push_back('\n');
        out += cell_text(p);
    }
    return out;
}

ZigzagPath parse_path(const std::string& text) {
    ZigzagPath path;
    std::size_t pos = 0;
    int line_no = 0;
    bool have_header = false;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        bool last = end == std::string::npos;
        std::string line =
            text.substr(pos, (last ? text.size() : end) - pos);
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        ++line_no;
        if (!line.empty()) {
            if (!have_header) {
                if (line == "RL") {
                    path.orientation = PathOrientation::RL;
                } else if (line == "LR") {
                    path.orientation = PathOrientation::LR;
                } else {
                    throw format_error("line " + std::to_string(line_no) +
                                       ": expected orientation header RL or "
                                       "LR, got '" +
                                       line + "'");
                }
                have_header = true;
            } else {
                std::size_t comma = line.find(',');
                if (comma == std::string::npos) {
                    throw format_error("line " + std::to_string(line_no) +
                                       ": expected 'row,col', got '" + line +
                                       "'");
                }
                std::string rs = line.substr(0, comma);
                std::string cs = line.substr(comma + 1);
                if (rs.empty() || cs.empty() ||
                    rs.find_first_not_of("0123456789") != std::string::npos ||
                    cs.find_first_not_of("0123456789") != std::string::npos) {
                    throw format_error("line " + std::to_string(line_no) +
                                       ": expected 'row,col', got '" + line +
                                       "'");
                }
                path.cells.push_back(Position{std::stoi(rs), std::stoi(cs)});
            }
        }
        if (last) {
            break;
        }
        pos = end + 1;
    }
    if (!have_header) {
        throw format_error("path text is empty");
    }
    if (path.cells.empty()) {
        throw format_error("path has no cells");
    }
    try {
        validate_path(path);
    } catch (const domain_error& e) {
        throw format_error(e.what());
    }
    path.complete = path_spans_own_box(path);
    return path;
}

BinaryMatrix matrix_from_path(const ZigzagPath& path, int m, int n) {
    validate_path(path, m, n);
    BinaryMatrix a(m, n);
    for (Position p : path.cells) {
        a.set(p.row - 1, p.col - 1, true);
    }
    return a;
}

std::optional<ZigzagPath> recognize_zigzag(const BinaryMatrix& a) {
    int m = a.rows();
    int n = a.cols();
    if (a.ones() != m + n - 1) {
        return std::nullopt;
    }
    if (!a.get(0, n - 1)) {
        return std::nullopt;
    }
    ZigzagPath path;
    path.orientation = PathOrientation::RL;
    path.complete = true;
    int r = 0;
    int c = n - 1;
    path.cells.push_back(Position{1, n});
    for (int step = 0; step < m + n - 2; ++step) {
        bool left = c > 0 && a.get(r, c - 1);
        bool down = r + 1 < m && a.get(r + 1, c);
        if (left == down) { // neither (walk stuck) or both (not a walk)
            return std::nullopt;
        }
        if (left) {
            --c;
        } else {
            ++r;
        }
        path.cells.push_back(Position{r + 1, c + 1});
    }
    // m+n-2 left/down steps can only end at the bottom-left corner, and the
    // cell count matches ones(), so the walk covers every 1. The final cell
    // has no 1 left or below it by the boundary.
    return path;
}

std::pair<std::vector<Position>, std::vector<Position>>
crucial_and_corner_ones(const ZigzagPath& path) {
    validate_path(path);
    if (path.orientation != PathOrientation::LR) {
        throw domain_error("crucial ones are defined on LR walks");
    }
    if (!path_spans_own_box(path)) {
        throw domain_error("crucial ones require a complete walk");
    }
    std::vector<Position> crucial;
    std::vector<Position> corner;
    for (std::size_t i = 1; i + 1 < path.cells.size(); ++i) {
        Position prev = path.cells[i - 1];
        Position here = path.cells[i];
        Position next = path.cells[i + 1];
        bool in_right = here.col == prev.col + 1;
        bool out_down = next.row == here.row + 1;
        if (in_right && out_down) {
            if (here.col < 2) {
                throw structural_error("turn cell has no room for a corner",
                                       here);
            }
            crucial.push_back(here);
            corner.push_back(Position{here.row + 1, here.col - 1});
        }
    }
    return {std::move(crucial), std::move(corner)};
}

ZigzagPath random_lr_path(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1) {
        throw domain_error("path dimensions must be at least 1");
    }
    // 0 = right, 1 = down. The initial layout (all rights, then all downs)
    // already starts with a right and ends with a down whenever both fit;
    // shuffling only the interior keeps those endpoints pinned.
    std::vector<char> moves;
    for (int i = 0; i < n - 1; ++i) {
        moves.push_back(0);
    }
    for (int i = 0; i < m - 1; ++i) {
        moves.push_back(1);
    }
    if (m >= 2 && n >= 2 && moves.size() > 3) {
        std::mt19937_64 rng(seed);
        // Hand-rolled Fisher-Yates instead of std::shuffle so results are
        // identical across standard library implementations.
        std::size_t lo = 1;
        for (std::size_t span = moves.size() - 2; span > 1; --span) {
            std::size_t j = lo + static_cast<std::size_t>(rng() % span);
            std::swap(moves[lo + span - 1], moves[j]);
        }
    }
    ZigzagPath path;
    path.orientation = PathOrientation::LR;
    path.complete = true;
    int r = 1;
    int c = 1;
    path.cells.push_back(Position{r, c});
    for (char mv : moves) {
        if (mv == 0) {
            ++c;
        } else {
            ++r;
        }
        path.cells.push_back(Position{r, c});
    }
    return path;
}

std::pair<FerrersShape, FerrersShape> path_zero_shapes(const ZigzagPath& path,
                                                       int m, int n) {
    validate_path(path, m, n);
    if (path.orientation != PathOrientation::RL || !path_spans_own_box(path) ||
        static_cast<int>(path.cells.size()) != m + n - 1) {
        throw domain_error("zero shapes require a complete RL walk");
    }
    std::vector<int> lo(m, n + 1);
    std::vector<int> hi(m, 0);
    for (Position p : path.cells) {
        lo[p.row - 1] = std::min(lo[p.row - 1], p.col);
        hi[p.row - 1] = std::max(hi[p.row - 1], p.col);
    }
    FerrersShape northwest;
    FerrersShape southeast;
    for (int r = 0; r < m; ++r) {
        northwest.row_lengths.push_back(lo[r] - 1);
        southeast.row_lengths.push_back(n - hi[r]);
    }
    return {std::move(northwest), std::move(southeast)};
}

} // namespace patmat
