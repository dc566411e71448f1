#include "patmat/extremal.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "patmat/contains.hpp"

namespace patmat {

long long staircase_max_ones(const StaircaseProfile& profile) {
    if (profile.m < 1 || profile.n < 1) {
        throw domain_error("staircase dimensions must be at least 1");
    }
    if (static_cast<int>(profile.e.size()) != profile.m) {
        throw domain_error("staircase profile needs one count per row");
    }
    long long prev = 0;
    for (long long v : profile.e) {
        if (v < prev || v > profile.n) {
            throw domain_error(
                "staircase counts must be nondecreasing and at most n");
        }
        prev = v;
    }
    long long best = 0;
    for (int i = 1; i <= profile.m; ++i) {
        best = std::max(best, profile.e[i - 1] + profile.m - i);
    }
    return best;
}

long long max_ones_identity_avoiding(int m, int n, int k) {
    if (m < 1 || n < 1) {
        throw domain_error("matrix dimensions must be at least 1");
    }
    if (k < 2) {
        throw domain_error("pattern length must be at least 2");
    }
    if (k > std::min(m, n)) {
        throw domain_error("pattern length exceeds min(m, n)");
    }
    if (k == 2) {
        return static_cast<long long>(m) + n - 1;
    }
    return static_cast<long long>(k - 1) * (m + n - (k - 1));
}

long long max_ones_312_avoiding(int m, int n) {
    if (m < 1 || n < 1) {
        throw domain_error("matrix dimensions must be at least 1");
    }
    if (m == 1 || n == 1) {
        return static_cast<long long>(m) * n;
    }
    return 2LL * (m + n - 2);
}

std::optional<std::pair<long long, bool>>
max_ones_formula(int m, int n, const Permutation& sigma) {
    int k = sigma.size();
    if (k > std::min(m, n)) {
        return std::pair<long long, bool>{static_cast<long long>(m) * n,
                                          false};
    }
    if (k == 1) {
        return std::pair<long long, bool>{0, false};
    }
    if (k == 2) {
        return std::pair<long long, bool>{static_cast<long long>(m) + n - 1,
                                          false};
    }
    if (k == 3) {
        return std::pair<long long, bool>{max_ones_312_avoiding(m, n), false};
    }
    if (sigma.is_identity() || sigma.reversed().is_identity()) {
        return std::pair<long long, bool>{
            static_cast<long long>(k - 1) * (m + n - (k - 1)), false};
    }
    if (sigma.is_rotation_k_first()) {
        return std::pair<long long, bool>{
            static_cast<long long>(k - 1) * (m + n - (k - 1)), true};
    }
    return std::nullopt;
}

BinaryMatrix construct_canonical_identity_avoiding(int m, int n, int k) {
    if (m < 1 || n < 1) {
        throw domain_error("matrix dimensions must be at least 1");
    }
    if (k < 2) {
        throw domain_error("pattern length must be at least 2");
    }
    if (k > std::min(m, n)) {
        throw domain_error("pattern length exceeds min(m, n)");
    }
    // Base walk from (1,n) to (m,1): k-2 lefts, a balanced merge of the
    // remaining lefts and downs, then k-2 downs. The flat prefix and
    // suffix make every diagonal shift of the walk lose exactly two cells
    // per step, which is what the 1-count needs.
    std::vector<char> moves; // 0 = left, 1 = down
    for (int i = 0; i < k - 2; ++i) {
        moves.push_back(0);
    }
    int li = n - k + 1; // interior lefts
    int di = m - k + 1; // interior downs
    {
        int l = 0;
        int d = 0;
        while (l < li || d < di) {
            // choose the move whose run is proportionally further behind;
            // ties go left
            if (d == di ||
                (l < li && static_cast<long long>(2 * l + 1) * di <=
                               static_cast<long long>(2 * d + 1) * li)) {
                moves.push_back(0);
                ++l;
            } else {
                moves.push_back(1);
                ++d;
            }
        }
    }
    for (int i = 0; i < k - 2; ++i) {
        moves.push_back(1);
    }
    std::vector<Position> base;
    {
        int r = 1;
        int c = n;
        base.push_back(Position{r, c});
        for (char mv : moves) {
            if (mv == 0) {
                --c;
            } else {
                ++r;
            }
            base.push_back(Position{r, c});
        }
    }
    BinaryMatrix a(m, n);
    int len = static_cast<int>(base.size());
    for (int t = 0; t <= k - 2; ++t) {
        // shifting southeast by t pushes the first and last t cells out of
        // bounds; the flat ends guarantee it is exactly those cells
        for (int i = t; i < len - t; ++i) {
            a.set(base[i].row - 1 + t, base[i].col - 1 + t, true);
        }
    }
    return a;
}

BinaryMatrix greedy_saturate(const BinaryMatrix& a, const Permutation& sigma,
                             std::uint64_t choice_seed) {
    if (contains_pattern_fast(a, sigma)) {
        throw domain_error("input already contains the pattern");
    }
    std::vector<std::pair<int, int>> zeros;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (!a.get(r, c)) {
                zeros.emplace_back(r, c);
            }
        }
    }
    std::mt19937_64 rng(choice_seed);
    // Hand-rolled Fisher-Yates for cross-platform reproducibility.
    for (std::size_t span = zeros.size(); span > 1; --span) {
        std::size_t j = static_cast<std::size_t>(rng() % span);
        std::swap(zeros[span - 1], zeros[j]);
    }
    BinaryMatrix out = a;
    // One pass suffices: flipping other 0s to 1s never makes a rejected
    // flip legal again, so a cell refused once stays refused.
    for (auto [r, c] : zeros) {
        out.set(r, c, true);
        if (contains_pattern_fast(out, sigma)) {
            out.set(r, c, false);
        }
    }
    return out;
}

bool validate_maximal(const BinaryMatrix& a, const Permutation& sigma) {
    if (contains_pattern_fast(a, sigma)) {
        return false;
    }
    BinaryMatrix work = a;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (work.get(r, c)) {
                continue;
            }
            work.set(r, c, true);
            bool creates = contains_pattern_fast(work, sigma);
            work.set(r, c, false);
            if (!creates) {
                return false;
            }
        }
    }
    return true;
}

std::vector<ZigzagPath> peel_zigzag_decomposition(const BinaryMatrix& a,
                                                  int k) {
    int m = a.rows();
    int n = a.cols();
    long long expected = max_ones_identity_avoiding(m, n, k); // domain checks
    if (longest_increasing_chain(a) >= k) {
        throw domain_error("matrix contains the pattern");
    }
    if (a.ones() != expected) {
        throw domain_error("matrix has " + std::to_string(a.ones()) +
                           " ones, peeling needs exactly " +
                           std::to_string(expected));
    }
    BinaryMatrix residual = a;
    std::vector<ZigzagPath> paths;
    for (int j = 0; j <= k - 2; ++j) {
        int r = j;
        int c = n - 1;
        if (!residual.get(r, c)) {
            throw structural_error("no 1 at the walk start",
                                   Position{r + 1, c + 1});
        }
        ZigzagPath path;
        path.orientation = PathOrientation::RL;
        path.complete = j == 0;
        path.cells.push_back(Position{r + 1, c + 1});
        // as far left as possible, then as far down as possible, repeated;
        // stepwise that is simply "left if you can, else down"
        while (true) {
            if (c - 1 >= j && residual.get(r, c - 1)) {
                --c;
            } else if (r + 1 <= m - 1 && residual.get(r + 1, c)) {
                ++r;
            } else {
                break;
            }
            path.cells.push_back(Position{r + 1, c + 1});
        }
        int want = m + n - 1 - 2 * j;
        if (r != m - 1 || c != j ||
            static_cast<int>(path.cells.size()) != want) {
            throw structural_error("walk stuck before reaching the corner",
                                   Position{r + 1, c + 1});
        }
        for (Position p : path.cells) {
            residual.set(p.row - 1, p.col - 1, false);
        }
        paths.push_back(std::move(path));
    }
    // lengths sum to the precondition count, so nothing can remain
    return paths;
}

namespace {

// One live subproblem of the 312 builder, in global 0-based coordinates.
// rows/cols list the global indices that form the virtual grid; the walk
// is complete for that grid, starts (1,1),(1,2), ends (h-1,w),(h,w), and
// the virtual (h,1) corner cell is already set in the output matrix.
struct BuildInstance {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<std::pair<int, int>> path;
};

using MoveChooser = std::function<BuildMove(const std::vector<BuildMove>&)>;

void expand_instance(BinaryMatrix& out, BuildInstance inst,
                     const MoveChooser& choose) {
    int h = static_cast<int>(inst.rows.size());
    int w = static_cast<int>(inst.cols.size());
    if (h + w - 4 <= 0) {
        return; // 2x2 (or thinner) instances carry no deficit
    }
    std::vector<BuildMove> legal;
    if (h >= 3) {
        // retiring the bottom row needs the walk to reach the last column
        // two virtual rows above it, so the shortened walk still ends with
        // a down step
        std::pair<int, int> need{inst.rows[h - 3], inst.cols[w - 1]};
        if (std::find(inst.path.begin(), inst.path.end(), need) !=
            inst.path.end()) {
            legal.push_back(BuildMove{true, 0});
        }
    }
    for (int q = 2; q <= w - 1; ++q) {
        legal.push_back(BuildMove{false, q});
    }
    // h + w >= 5 guarantees at least one candidate: w >= 3 offers an
    // interior column, and w == 2 forces the walk down the last column
    // early enough to retire
    BuildMove mv = choose(legal);
    if (std::find(legal.begin(), legal.end(), mv) == legal.end()) {
        throw domain_error("scripted move is not legal for this instance");
    }
    if (mv.retire) {
        out.set(inst.rows[h - 2], inst.cols[0], true);
        BuildInstance next;
        next.rows.assign(inst.rows.begin(), inst.rows.end() - 1);
        next.cols = inst.cols;
        next.path.assign(inst.path.begin(), inst.path.end() - 1);
        expand_instance(out, std::move(next), choose);
        return;
    }
    int qi = mv.q - 1;
    int gcol = inst.cols[qi];
    // last walk cell in that column
    int path_idx = -1;
    for (int i = 0; i < static_cast<int>(inst.path.size()); ++i) {
        if (inst.path[i].second == gcol) {
            path_idx = i;
        }
    }
    int grow = inst.path[path_idx].first;
    int p_idx = static_cast<int>(
        std::lower_bound(inst.rows.begin(), inst.rows.end(), grow) -
        inst.rows.begin());
    out.set(inst.rows[h - 1], gcol, true);

    BuildInstance left;
    left.rows.assign(inst.rows.begin(), inst.rows.begin() + p_idx + 1);
    left.rows.push_back(inst.rows[h - 1]);
    left.cols.assign(inst.cols.begin(), inst.cols.begin() + qi + 1);
    left.path.assign(inst.path.begin(), inst.path.begin() + path_idx + 1);
    left.path.emplace_back(inst.rows[h - 1], gcol);

    BuildInstance right;
    right.rows.assign(inst.rows.begin() + p_idx, inst.rows.end());
    right.cols.assign(inst.cols.begin() + qi, inst.cols.end());
    right.path.assign(inst.path.begin() + path_idx, inst.path.end());

    expand_instance(out, std::move(left), choose);
    expand_instance(out, std::move(right), choose);
}

void require_builder_path(int m, int n, const ZigzagPath& path) {
    if (m < 2 || n < 2) {
        throw domain_error("the 312 builder needs m, n >= 2");
    }
    validate_path(path, m, n);
    if (path.orientation != PathOrientation::LR ||
        static_cast<int>(path.cells.size()) != m + n - 1 ||
        path.cells.front() != Position{1, 1} ||
        path.cells[1] != Position{1, 2} ||
        path.cells.back() != Position{m, n} ||
        path.cells[path.cells.size() - 2] != Position{m - 1, n}) {
        throw domain_error(
            "builder walk must run (1,1),(1,2),...,(m-1,n),(m,n)");
    }
}

BinaryMatrix build_312(int m, int n, const ZigzagPath& path,
                       const MoveChooser& choose) {
    require_builder_path(m, n, path);
    BinaryMatrix out(m, n);
    BuildInstance top;
    for (int r = 0; r < m; ++r) {
        top.rows.push_back(r);
    }
    for (int c = 0; c < n; ++c) {
        top.cols.push_back(c);
    }
    for (Position p : path.cells) {
        top.path.emplace_back(p.row - 1, p.col - 1);
        out.set(p.row - 1, p.col - 1, true);
    }
    out.set(m - 1, 0, true);
    expand_instance(out, std::move(top), choose);
    return out;
}

} // namespace

BinaryMatrix construct_312_maximal(int m, int n, const ZigzagPath& path,
                                   std::uint64_t choice_seed) {
    std::mt19937_64 rng(choice_seed);
    return build_312(m, n, path,
                     [&rng](const std::vector<BuildMove>& legal) {
                         return legal[rng() % legal.size()];
                     });
}

BinaryMatrix construct_312_maximal_scripted(int m, int n,
                                            const ZigzagPath& path,
                                            std::span<const BuildMove> moves) {
    std::size_t next = 0;
    BinaryMatrix out = build_312(
        m, n, path,
        [&moves, &next](const std::vector<BuildMove>&) {
            if (next >= moves.size()) {
                throw domain_error("move script ended before the build did");
            }
            return moves[next++];
        });
    if (next != moves.size()) {
        throw domain_error("move script has " +
                           std::to_string(moves.size() - next) +
                           " unused moves");
    }
    return out;
}

BinaryMatrix construct_312_shadow(int m, int n, const ZigzagPath& path) {
    require_builder_path(m, n, path);
    BinaryMatrix out = matrix_from_path(path, m, n);
    out.set(m - 1, 0, true);
    auto [crucial, corner] = crucial_and_corner_ones(path);
    for (std::size_t i = 0; i < crucial.size(); ++i) {
        int col = crucial[i].col - 1; // shadow column, 1-based col - 1
        int from = crucial[i].row + 1;
        int to = i + 1 < crucial.size() ? crucial[i + 1].row : m - 1;
        for (int r = from; r <= to; ++r) {
            out.set(r - 1, col - 1, true);
        }
    }
    for (int c = 1; c <= n - 1; ++c) {
        out.set(m - 1, c - 1, true);
    }
    return out;
}

std::vector<Permutation> decompose_Jn(int n) {
    if (n < 1) {
        throw domain_error("n must be at least 1");
    }
    std::vector<Permutation> out;
    for (int j = 0; j < n; ++j) {
        std::vector<int> v;
        for (int x = n - j; x >= 1; --x) {
            v.push_back(x);
        }
        for (int x = n; x > n - j; --x) {
            v.push_back(x);
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

} // namespace patmat
