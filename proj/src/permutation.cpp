#include "patmat/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace patmat {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw domain_error("permutation must have length at least 1");
    }
    std::vector<bool> seen(values_.size(), false);
    for (int v : values_) {
        if (v < 1 || v > static_cast<int>(values_.size()) || seen[v - 1]) {
            throw domain_error("values are not a permutation of 1.." +
                               std::to_string(values_.size()));
        }
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int k) {
    if (k < 1) {
        throw domain_error("permutation must have length at least 1");
    }
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::rotation_k_first(int k) {
    if (k < 1) {
        throw domain_error("permutation must have length at least 1");
    }
    std::vector<int> v(k);
    v[0] = k;
    std::iota(v.begin() + 1, v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& word) {
    if (word.empty()) {
        throw format_error("empty permutation word");
    }
    std::vector<int> values;
    if (word.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= word.size()) {
            std::size_t comma = word.find(',', pos);
            std::string item = word.substr(
                pos, (comma == std::string::npos ? word.size() : comma) - pos);
            if (item.empty() ||
                item.find_first_not_of("0123456789") != std::string::npos) {
                throw format_error("bad permutation entry '" + item + "' in '" +
                                   word + "'");
            }
            values.push_back(std::stoi(item));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
    } else {
        for (char c : word) {
            if (c < '1' || c > '9') {
                throw format_error(
                    "bad permutation word '" + word +
                    "': digit form allows 1-9 only; use commas for longer "
                    "patterns");
            }
            values.push_back(c - '0');
        }
    }
    try {
        return Permutation(std::move(values));
    } catch (const domain_error& e) {
        // A malformed word is an input-format problem for parsers.
        throw format_error("bad permutation word '" + word + "': " + e.what());
    }
}

std::string Permutation::word() const {
    std::string out;
    bool commas = size() > 9;
    for (int i = 0; i < size(); ++i) {
        if (commas && i > 0) {
            out.push_back(',');
        }
        out += std::to_string(values_[i]);
    }
    return out;
}

BinaryMatrix Permutation::to_matrix() const {
    BinaryMatrix q(size(), size());
    for (int i = 0; i < size(); ++i) {
        q.set(i, values_[i] - 1, true);
    }
    return q;
}

Permutation Permutation::reversed() const {
    std::vector<int> v(values_.rbegin(), values_.rend());
    return Permutation(std::move(v));
}

Permutation Permutation::complemented() const {
    std::vector<int> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        v[i] = static_cast<int>(values_.size()) + 1 - values_[i];
    }
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i) {
        if (values_[i] != i + 1) {
            return false;
        }
    }
    return true;
}

bool Permutation::is_rotation_k_first() const {
    if (values_[0] != size()) {
        return false;
    }
    for (int i = 1; i < size(); ++i) {
        if (values_[i] != i) {
            return false;
        }
    }
    return true;
}

int Permutation::descent_count() const {
    int count = 0;
    for (int i = 1; i < size(); ++i) {
        if (values_[i - 1] > values_[i]) {
            ++count;
        }
    }
    return count;
}

int Permutation::ascent_count() const {
    int count = 0;
    for (int i = 1; i < size(); ++i) {
        if (values_[i - 1] < values_[i]) {
            ++count;
        }
    }
    return count;
}

BinaryMatrix pattern_to_matrix(const Permutation& sigma) {
    return sigma.to_matrix();
}

} // namespace patmat
