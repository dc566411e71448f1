#include "patmat/contains.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

namespace patmat {

namespace {

// Backtracking state for the generic matrix matcher.
struct MatrixSearch {
    const BinaryMatrix& a;
    const std::vector<int>& p; // 1-based pattern values
    int k;
    std::vector<int> col_of; // host column per pattern column, -1 unset

    // Match pattern row i (0-based) using host rows >= row_from.
    bool match(int i, int row_from) {
        if (i == k) {
            return true;
        }
        int pc = p[i] - 1; // pattern column that needs a 1 in this row
        int lo = -1;
        int hi = a.cols();
        for (int j = 0; j < k; ++j) {
            if (col_of[j] < 0) {
                continue;
            }
            if (j < pc) {
                lo = std::max(lo, col_of[j]);
            } else {
                hi = std::min(hi, col_of[j]);
            }
        }
        for (int t = row_from; t <= a.rows() - (k - i); ++t) {
            for (int w = (lo + 1) / 64; w < a.words_per_row(); ++w) {
                std::uint64_t word = a.row_word(t, w);
                int base = w * 64;
                if (base <= lo) {
                    word &= ~std::uint64_t{0} << (lo + 1 - base);
                }
                while (word) {
                    int c = base + std::countr_zero(word);
                    if (c >= hi) {
                        word = 0;
                        break;
                    }
                    word &= word - 1;
                    col_of[pc] = c;
                    if (match(i + 1, t + 1)) {
                        return true;
                    }
                    col_of[pc] = -1;
                }
                if (base + 64 >= hi) {
                    break;
                }
            }
        }
        return false;
    }
};

// Does A hold a 1 strictly below and strictly left of another 1? Sweep
// rows while tracking the rightmost 1 seen in earlier rows.
bool contains_21(const BinaryMatrix& a) {
    int max_col_above = -1;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < max_col_above; ++c) {
            if (a.get(r, c)) {
                return true;
            }
        }
        for (int c = a.cols() - 1; c > max_col_above; --c) {
            if (a.get(r, c)) {
                max_col_above = c;
                break;
            }
        }
    }
    return false;
}

// Backtracking state for the sequence matcher.
struct SequenceSearch {
    std::span<const int> seq;
    const std::vector<int>& p;
    int k;
    bool anchor_back; // pattern position k must land on the last element
    std::vector<int> val_of;     // sequence value per pattern rank
    std::vector<char> assigned;  // per pattern rank

    bool match(int i, int pos_from) {
        if (i == k) {
            return true;
        }
        int rank = p[i] - 1;
        long long lo = std::numeric_limits<long long>::min();
        long long hi = std::numeric_limits<long long>::max();
        for (int j = 0; j < k; ++j) {
            if (!assigned[j]) {
                continue;
            }
            if (j < rank) {
                lo = std::max<long long>(lo, val_of[j]);
            } else {
                hi = std::min<long long>(hi, val_of[j]);
            }
        }
        int last = static_cast<int>(seq.size()) - 1;
        int pos_end = last - (k - 1 - i); // leave room for later positions
        int pos_begin = pos_from;
        if (anchor_back && i == k - 1) {
            pos_begin = std::max(pos_begin, last);
        }
        for (int t = pos_begin; t <= pos_end; ++t) {
            long long v = seq[t];
            if (v <= lo || v >= hi) {
                continue;
            }
            val_of[rank] = seq[t];
            assigned[rank] = 1;
            if (match(i + 1, t + 1)) {
                return true;
            }
            assigned[rank] = 0;
        }
        return false;
    }
};

bool sequence_match(std::span<const int> seq, const Permutation& sigma,
                    bool anchor_back) {
    int k = sigma.size();
    if (k > static_cast<int>(seq.size())) {
        return false;
    }
    SequenceSearch s{seq, sigma.values(), k, anchor_back,
                     std::vector<int>(k, 0), std::vector<char>(k, 0)};
    return s.match(0, 0);
}

} // namespace

bool contains_pattern(const BinaryMatrix& a, const Permutation& sigma) {
    int k = sigma.size();
    if (k > a.rows() || k > a.cols()) {
        return false;
    }
    MatrixSearch s{a, sigma.values(), k, std::vector<int>(k, -1)};
    return s.match(0, 0);
}

int longest_increasing_chain(const BinaryMatrix& a) {
    int m = a.rows();
    int n = a.cols();
    std::vector<int> best(n, 0); // best chain ending at a 1 in this column
    std::vector<std::pair<int, int>> row_updates;
    int overall = 0;
    for (int r = 0; r < m; ++r) {
        row_updates.clear();
        int prefix = 0; // max of best[0..c-1] over earlier rows
        for (int c = 0; c < n; ++c) {
            if (a.get(r, c)) {
                row_updates.emplace_back(c, prefix + 1);
            }
            prefix = std::max(prefix, best[c]);
        }
        for (auto [c, v] : row_updates) {
            best[c] = std::max(best[c], v);
            overall = std::max(overall, v);
        }
    }
    return overall;
}

bool contains_312(const BinaryMatrix& a) {
    int m = a.rows();
    int n = a.cols();
    if (m < 3 || n < 3) {
        return false;
    }
    // lowest[c]: largest row holding a 1 in column c, -1 if none.
    // below[c][r]: smallest row >= r holding a 1 in column c, m if none.
    std::vector<int> lowest(n, -1);
    std::vector<std::vector<int>> below(n, std::vector<int>(m + 1, m));
    for (int c = 0; c < n; ++c) {
        for (int r = m - 1; r >= 0; --r) {
            if (a.get(r, c)) {
                below[c][r] = r;
                if (lowest[c] < 0) {
                    lowest[c] = r;
                }
            } else {
                below[c][r] = below[c][r + 1];
            }
        }
    }
    for (int i = 0; i < m - 2; ++i) {
        for (int j = 2; j < n; ++j) {
            if (!a.get(i, j)) {
                continue;
            }
            // (i,j) is the '3'. Sweep candidate '2' columns left of j while
            // tracking the earliest possible '1' row in columns further left.
            int min_one_row = m;
            for (int c2 = 0; c2 < j; ++c2) {
                if (min_one_row < m && lowest[c2] > min_one_row) {
                    return true;
                }
                min_one_row = std::min(min_one_row, below[c2][i + 1]);
            }
        }
    }
    return false;
}

bool contains_pattern_fast(const BinaryMatrix& a, const Permutation& sigma) {
    int k = sigma.size();
    if (k > a.rows() || k > a.cols()) {
        return false;
    }
    if (k == 1) {
        return a.ones() > 0;
    }
    if (sigma.is_identity()) {
        return longest_increasing_chain(a) >= k;
    }
    if (sigma.reversed().is_identity()) { // k, k-1, ..., 1
        return longest_increasing_chain(a.reversed_rows()) >= k;
    }
    if (k == 2) { // only 21 remains
        return contains_21(a);
    }
    if (k == 3) {
        const auto& v = sigma.values();
        if (v[0] == 3 && v[1] == 1 && v[2] == 2) {
            return contains_312(a);
        }
        if (v[0] == 1 && v[1] == 3 && v[2] == 2) {
            // complement of 312 transports across a column reversal
            return contains_312(a.reversed_cols());
        }
        if (v[0] == 2 && v[1] == 1 && v[2] == 3) {
            // reversal of 312 transports across a row reversal
            return contains_312(a.reversed_rows());
        }
        if (v[0] == 2 && v[1] == 3 && v[2] == 1) {
            return contains_312(a.reversed_rows().reversed_cols());
        }
    }
    return contains_pattern(a, sigma);
}

bool sequence_contains_pattern(std::span<const int> seq,
                               const Permutation& sigma) {
    return sequence_match(seq, sigma, false);
}

bool sequence_gains_pattern_at_back(std::span<const int> seq,
                                    const Permutation& sigma) {
    return sequence_match(seq, sigma, true);
}

} // namespace patmat
