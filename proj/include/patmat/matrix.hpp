#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patmat/errors.hpp"

namespace patmat {

// Dense 0/1 matrix. Dimensions are fixed at construction; rows are stored
// as packed 64-bit words so the containment checkers and the exhaustive
// oracle can work word-at-a-time.
class BinaryMatrix {
  public:
    // Zero-filled rows x cols matrix. rows, cols >= 1.
    BinaryMatrix(int rows, int cols);

    // One row per line, characters '0'/'1', interior spaces and tabs
    // ignored. Throws format_error naming the offending line or cell.
    static BinaryMatrix parse(const std::string& text);

    static BinaryMatrix all_ones(int rows, int cols);

    int rows() const noexcept { return m_; }
    int cols() const noexcept { return n_; }

    bool get(int r, int c) const;       // 0-based
    void set(int r, int c, bool value); // 0-based

    // Number of 1 entries.
    long long ones() const noexcept;
    int row_ones(int r) const;

    // Packed access. Word w of row r covers columns [64w, 64w+63].
    int words_per_row() const noexcept { return wpr_; }
    std::uint64_t row_word(int r, int w) const;
    // Whole row as a single word; only valid while cols() <= 64.
    std::uint64_t row_bits(int r) const;
    void set_row_bits(int r, std::uint64_t bits);

    // One row per line, no whitespace, no trailing newline.
    std::string render() const;

    BinaryMatrix reversed_rows() const;
    BinaryMatrix reversed_cols() const;
    BinaryMatrix transposed() const;

    // Entrywise order: true iff this(r,c) <= other(r,c) everywhere.
    bool dominated_by(const BinaryMatrix& other) const;

    friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  private:
    int m_;
    int n_;
    int wpr_;
    std::vector<std::uint64_t> words_; // m_ * wpr_ words, row-major
};

// Free-function spelling used by the CLI and the tests.
BinaryMatrix parse_matrix(const std::string& text);

} // namespace patmat
