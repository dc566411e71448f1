#include "patmat/analytics.hpp"

#include <algorithm>
#include <bit>

#include <boost/multiprecision/cpp_int.hpp>

#include "patmat/contains.hpp"

namespace patmat {

namespace {

void avoiding_dfs(int n, const Permutation& sigma, std::vector<int>& prefix,
                  std::vector<char>& used,
                  const std::function<void(const Permutation&)>& fn) {
    if (static_cast<int>(prefix.size()) == n) {
        fn(Permutation(prefix));
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v]) {
            continue;
        }
        prefix.push_back(v);
        used[v] = 1;
        if (!sequence_gains_pattern_at_back(prefix, sigma)) {
            avoiding_dfs(n, sigma, prefix, used, fn);
        }
        used[v] = 0;
        prefix.pop_back();
    }
}

} // namespace

void for_each_avoiding(int n, const Permutation& sigma,
                       const std::function<void(const Permutation&)>& fn) {
    if (n < 1) {
        throw domain_error("n must be at least 1");
    }
    std::vector<int> prefix;
    std::vector<char> used(n + 1, 0);
    avoiding_dfs(n, sigma, prefix, used, fn);
}

std::vector<Permutation> enumerate_avoiding(int n, const Permutation& sigma) {
    std::vector<Permutation> out;
    for_each_avoiding(n, sigma,
                      [&out](const Permutation& p) { out.push_back(p); });
    return out;
}

unsigned long long count_avoiding(int n, const Permutation& sigma) {
    unsigned long long count = 0;
    for_each_avoiding(n, sigma, [&count](const Permutation&) { ++count; });
    return count;
}

unsigned long long catalan(int n) {
    if (n < 0) {
        throw domain_error("catalan is defined for n >= 0");
    }
    if (n > 36) {
        throw domain_error(
            "catalan(n) exceeds 64 bits for n > 36; use catalan_decimal");
    }
    unsigned long long c = 1;
    for (int i = 0; i < n; ++i) {
        // C_{i+1} = C_i * 2(2i+1)/(i+2), always an exact division
        unsigned __int128 t =
            static_cast<unsigned __int128>(c) * (2 * (2 * i + 1));
        c = static_cast<unsigned long long>(t / (i + 2));
    }
    return c;
}

std::string catalan_decimal(int n) {
    if (n < 0) {
        throw domain_error("catalan is defined for n >= 0");
    }
    boost::multiprecision::cpp_int c = 1;
    for (int i = 0; i < n; ++i) {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    return c.str();
}

unsigned long long permanent(const BinaryMatrix& a) {
    if (a.rows() != a.cols()) {
        throw domain_error("permanent needs a square matrix");
    }
    int n = a.rows();
    if (n > 30) {
        throw resource_error("permanent supports n <= 30");
    }
    std::vector<std::uint64_t> row(n);
    for (int r = 0; r < n; ++r) {
        row[r] = a.row_bits(r);
    }
    // Ryser: per(A) = (-1)^n sum over column subsets S of (-1)^|S| times
    // the product of row sums restricted to S. Subsets walk in Gray-code
    // order so each step toggles one column. Arithmetic is mod 2^128 via
    // unsigned wraparound; the true permanent is below 2^128 for n <= 30,
    // so the reduced total is exact.
    std::vector<int> rowsum(n, 0);
    unsigned __int128 total = 0;
    std::uint64_t gray = 0;
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < limit; ++k) {
        int bit = std::countr_zero(k);
        gray = k ^ (k >> 1);
        int delta = ((gray >> bit) & 1) ? 1 : -1;
        for (int r = 0; r < n; ++r) {
            if ((row[r] >> bit) & 1) {
                rowsum[r] += delta;
            }
        }
        unsigned __int128 prod = 1;
        for (int r = 0; r < n && prod != 0; ++r) {
            prod *= static_cast<unsigned>(rowsum[r]);
        }
        if ((n - std::popcount(gray)) % 2 == 0) {
            total += prod;
        } else {
            total -= prod;
        }
    }
    if (total > static_cast<unsigned __int128>(~std::uint64_t{0})) {
        throw resource_error("permanent exceeds 64-bit range");
    }
    return static_cast<unsigned long long>(total);
}

namespace {

struct PermanentSearch {
    const BinaryMatrix& a;
    const Permutation& sigma;
    int n;
    bool collect;
    std::vector<int> prefix;
    std::uint64_t used = 0;
    AvoidingPermanentReport report;

    void dfs(int r) {
        if (r == n) {
            ++report.value;
            ++report.witness_count;
            if (collect) {
                report.witnesses->push_back(Permutation(prefix));
            }
            return;
        }
        std::uint64_t options = a.row_bits(r) & ~used;
        while (options) {
            int c = std::countr_zero(options);
            options &= options - 1;
            prefix.push_back(c + 1);
            used |= std::uint64_t{1} << c;
            if (!sequence_gains_pattern_at_back(prefix, sigma)) {
                dfs(r + 1);
            }
            used &= ~(std::uint64_t{1} << c);
            prefix.pop_back();
        }
    }
};

} // namespace

AvoidingPermanentReport avoiding_permanent(const BinaryMatrix& a,
                                           const Permutation& sigma,
                                           bool collect_witnesses) {
    if (a.rows() != a.cols()) {
        throw domain_error("avoiding permanent needs a square matrix");
    }
    if (a.cols() > 64) {
        throw resource_error("avoiding permanent supports n <= 64");
    }
    PermanentSearch s{a, sigma, a.rows(), collect_witnesses, {}, 0, {}};
    if (collect_witnesses) {
        s.report.witnesses.emplace();
    }
    s.dfs(0);
    return s.report;
}

namespace {

// Is one dominated permutation whose word contains sigma reachable?
bool supported_containing_dfs(const BinaryMatrix& a, const Permutation& sigma,
                              std::vector<int>& prefix, std::uint64_t& used,
                              int r) {
    int n = a.rows();
    if (r == n) {
        return sequence_contains_pattern(prefix, sigma);
    }
    std::uint64_t options = a.row_bits(r) & ~used;
    while (options) {
        int c = std::countr_zero(options);
        options &= options - 1;
        prefix.push_back(c + 1);
        used |= std::uint64_t{1} << c;
        bool found = supported_containing_dfs(a, sigma, prefix, used, r + 1);
        used &= ~(std::uint64_t{1} << c);
        prefix.pop_back();
        if (found) {
            return true;
        }
    }
    return false;
}

} // namespace

bool is_sigma_permutation_avoiding(const BinaryMatrix& a,
                                   const Permutation& sigma) {
    if (a.rows() != a.cols()) {
        throw domain_error("permutation avoidance needs a square matrix");
    }
    if (a.cols() > 64) {
        throw resource_error("permutation avoidance supports n <= 64");
    }
    std::vector<int> prefix;
    std::uint64_t used = 0;
    return !supported_containing_dfs(a, sigma, prefix, used, 0);
}

namespace {

// Kuhn augmenting-path matching on rows -> columns, with one optional
// banned row and banned column (an (i,j) minor).
struct Matcher {
    const BinaryMatrix& a;
    int n;
    int banned_row;
    int banned_col;
    std::vector<int> match_col; // column -> row, -1 free
    std::vector<char> visited;

    bool augment(int r) {
        for (int c = 0; c < n; ++c) {
            if (c == banned_col || visited[c] || !a.get(r, c)) {
                continue;
            }
            visited[c] = 1;
            if (match_col[c] < 0 || augment(match_col[c])) {
                match_col[c] = r;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        match_col.assign(n, -1);
        for (int r = 0; r < n; ++r) {
            if (r == banned_row) {
                continue;
            }
            visited.assign(n, 0);
            if (!augment(r)) {
                return false;
            }
        }
        return true;
    }
};

bool minor_has_perfect_matching(const BinaryMatrix& a, int banned_row,
                                int banned_col) {
    Matcher m{a, a.rows(), banned_row, banned_col, {}, {}};
    return m.perfect();
}

void require_square_nonzero(const BinaryMatrix& a, const char* op) {
    if (a.rows() != a.cols()) {
        throw domain_error(std::string(op) + " needs a square matrix");
    }
    if (a.ones() == 0) {
        throw domain_error(std::string(op) +
                           " is undefined for the zero matrix");
    }
}

} // namespace

bool is_total_support(const BinaryMatrix& a) {
    require_square_nonzero(a, "total support");
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (a.get(r, c) && !minor_has_perfect_matching(a, r, c)) {
                return false;
            }
        }
    }
    return true;
}

bool is_fully_indecomposable(const BinaryMatrix& a) {
    require_square_nonzero(a, "full indecomposability");
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (!minor_has_perfect_matching(a, r, c)) {
                return false;
            }
        }
    }
    return true;
}

bool is_grassmannian(const Permutation& pi) {
    return pi.descent_count() <= 1;
}

bool is_reverse_grassmannian(const Permutation& pi) {
    return pi.ascent_count() <= 1;
}

namespace {

bool extend_dfs(int n, const Permutation& sigma, const std::vector<int>& sub,
                const std::vector<int>& sub_pos, std::vector<int>& prefix,
                std::vector<char>& used, std::size_t ptr,
                std::vector<int>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out = prefix;
        return true;
    }
    for (int v = 1; v <= n; ++v) {
        if (used[v]) {
            continue;
        }
        // a value reserved by the unplaced part of sub may only appear
        // when it is the next one due
        if (sub_pos[v] >= 0 && sub_pos[v] != static_cast<int>(ptr)) {
            continue;
        }
        std::size_t next_ptr = ptr + (sub_pos[v] == static_cast<int>(ptr));
        prefix.push_back(v);
        used[v] = 1;
        bool done = !sequence_gains_pattern_at_back(prefix, sigma) &&
                    extend_dfs(n, sigma, sub, sub_pos, prefix, used, next_ptr,
                               out);
        used[v] = 0;
        prefix.pop_back();
        if (done) {
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<Permutation> extend_avoiding(const std::vector<int>& sub, int n,
                                           const Permutation& sigma) {
    if (n < 1) {
        throw domain_error("n must be at least 1");
    }
    std::vector<int> sub_pos(n + 1, -1); // value -> index in sub
    for (std::size_t i = 0; i < sub.size(); ++i) {
        int v = sub[i];
        if (v < 1 || v > n) {
            throw domain_error("subsequence value " + std::to_string(v) +
                               " is out of range 1.." + std::to_string(n));
        }
        if (sub_pos[v] >= 0) {
            throw domain_error("subsequence repeats the value " +
                               std::to_string(v));
        }
        sub_pos[v] = static_cast<int>(i);
    }
    if (sequence_contains_pattern(sub, sigma)) {
        throw domain_error("subsequence already contains the pattern");
    }
    std::vector<int> prefix;
    std::vector<char> used(n + 1, 0);
    std::vector<int> out;
    if (extend_dfs(n, sigma, sub, sub_pos, prefix, used, 0, out)) {
        return Permutation(out);
    }
    return std::nullopt;
}

} // namespace patmat
