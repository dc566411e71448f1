#pragma once

#include <string>
#include <vector>

#include "patmat/errors.hpp"
#include "patmat/matrix.hpp"

namespace patmat {

// A permutation of {1,...,k}, used both as a forbidden pattern and as a
// plain permutation (enumeration results, J_n factors, ...).
class Permutation {
  public:
    // values must be a bijection on {1,...,values.size()}.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int k);
    // The rotation k,1,2,...,k-1.
    static Permutation rotation_k_first(int k);

    // Accepts the compact digit word ("312", digits valid up to k=9) or a
    // comma-separated value list ("3,1,2", required for k >= 10).
    static Permutation parse(const std::string& word);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    // 1-based position -> value.
    int at(int i) const { return values_[i - 1]; }
    const std::vector<int>& values() const noexcept { return values_; }

    // Compact rendering: digit word for k <= 9, comma-separated otherwise.
    std::string word() const;

    // k x k matrix with a 1 exactly at (i, p_i) for each row i.
    BinaryMatrix to_matrix() const;

    Permutation reversed() const;     // (p_k, ..., p_1)
    Permutation complemented() const; // (k+1-p_1, ..., k+1-p_k)

    bool is_identity() const;
    bool is_rotation_k_first() const; // k,1,2,...,k-1
    int descent_count() const;
    int ascent_count() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> values_;
};

BinaryMatrix pattern_to_matrix(const Permutation& sigma);

} // namespace patmat
