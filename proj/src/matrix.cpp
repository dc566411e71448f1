#include "patmat/matrix.hpp"

#include <bit>
#include <sstream>

namespace patmat {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r';
}

} // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols) : m_(rows), n_(cols) {
    if (rows < 1 || cols < 1) {
        throw domain_error("matrix dimensions must be at least 1x1");
    }
    wpr_ = (cols + 63) / 64;
    words_.assign(static_cast<std::size_t>(m_) * wpr_, 0);
}

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
    std::vector<std::vector<bool>> grid;
    std::size_t line_start = 0;
    int line_no = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        bool last = line_end == std::string::npos;
        std::string_view line(text.data() + line_start,
                              (last ? text.size() : line_end) - line_start);
        // A trailing newline leaves one final empty segment; drop it.
        if (last && line.empty()) {
            break;
        }
        ++line_no;
        std::vector<bool> row;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (c == '0') {
                row.push_back(false);
            } else if (c == '1') {
                row.push_back(true);
            } else if (!is_space(c)) {
                throw format_error("illegal character '" + std::string(1, c) +
                                   "' at line " + std::to_string(line_no) +
                                   ", column " + std::to_string(i + 1));
            }
        }
        if (row.empty()) {
            throw format_error("line " + std::to_string(line_no) +
                               " contains no matrix entries");
        }
        if (!grid.empty() && row.size() != grid.front().size()) {
            throw format_error(
                "line " + std::to_string(line_no) + " has " +
                std::to_string(row.size()) + " entries, expected " +
                std::to_string(grid.front().size()));
        }
        grid.push_back(std::move(row));
        if (last) {
            break;
        }
        line_start = line_end + 1;
    }
    if (grid.empty()) {
        throw format_error("matrix text is empty");
    }
    BinaryMatrix a(static_cast<int>(grid.size()),
                   static_cast<int>(grid.front().size()));
    for (int r = 0; r < a.m_; ++r) {
        for (int c = 0; c < a.n_; ++c) {
            if (grid[r][c]) {
                a.set(r, c, true);
            }
        }
    }
    return a;
}

BinaryMatrix BinaryMatrix::all_ones(int rows, int cols) {
    BinaryMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            a.set(r, c, true);
        }
    }
    return a;
}

bool BinaryMatrix::get(int r, int c) const {
    return (words_[static_cast<std::size_t>(r) * wpr_ + c / 64] >>
            (c % 64)) &
           1u;
}

void BinaryMatrix::set(int r, int c, bool value) {
    std::uint64_t& w = words_[static_cast<std::size_t>(r) * wpr_ + c / 64];
    std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (value) {
        w |= bit;
    } else {
        w &= ~bit;
    }
}

long long BinaryMatrix::ones() const noexcept {
    long long total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

int BinaryMatrix::row_ones(int r) const {
    int total = 0;
    for (int w = 0; w < wpr_; ++w) {
        total += std::popcount(words_[static_cast<std::size_t>(r) * wpr_ + w]);
    }
    return total;
}

std::uint64_t BinaryMatrix::row_word(int r, int w) const {
    return words_[static_cast<std::size_t>(r) * wpr_ + w];
}

std::uint64_t BinaryMatrix::row_bits(int r) const {
    return words_[static_cast<std::size_t>(r) * wpr_];
}

void BinaryMatrix::set_row_bits(int r, std::uint64_t bits) {
    words_[static_cast<std::size_t>(r) * wpr_] = bits;
}

std::string BinaryMatrix::render() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(m_) * (n_ + 1));
    for (int r = 0; r < m_; ++r) {
        if (r > 0) {
            out.push_back('\n');
        }
        for (int c = 0; c < n_; ++c) {
            out.push_back(get(r, c) ? '1' : '0');
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::reversed_rows() const {
    BinaryMatrix out(m_, n_);
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < n_; ++c) {
            out.set(m_ - 1 - r, c, get(r, c));
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::reversed_cols() const {
    BinaryMatrix out(m_, n_);
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < n_; ++c) {
            out.set(r, n_ - 1 - c, get(r, c));
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix out(n_, m_);
    for (int r = 0; r < m_; ++r) {
        for (int c = 0; c < n_; ++c) {
            out.set(c, r, get(r, c));
        }
    }
    return out;
}

bool BinaryMatrix::dominated_by(const BinaryMatrix& other) const {
    if (m_ != other.m_ || n_ != other.n_) {
        return false;
    }
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) {
            return false;
        }
    }
    return true;
}

BinaryMatrix parse_matrix(const std::string& text) {
    return BinaryMatrix::parse(text);
}

} // namespace patmat
