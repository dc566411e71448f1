#include "patmat/oracle.hpp"

#include <bit>

#include "patmat/analytics.hpp"
#include "patmat/contains.hpp"
#include "patmat/errors.hpp"
#include "patmat/extremal.hpp"

namespace patmat {

namespace {

// Row-by-row scan over all sigma-avoiding fillings. Rows below the
// current depth are kept zero, so containment checks on the working
// matrix see exactly the committed prefix.
struct AvoidingScan {
    int m;
    int n;
    const Permutation& sigma;
    BinaryMatrix work;
    std::vector<std::uint64_t> cur;
    unsigned long long leaves = 0;

    AvoidingScan(int m_, int n_, const Permutation& sigma_)
        : m(m_), n(n_), sigma(sigma_), work(m_, n_), cur(m_, 0) {}

    // visit(ones) is called at every avoiding leaf; prune(ones, next_row)
    // may cut a branch before descending.
    template <class Visit, class Prune>
    void run(Visit&& visit, Prune&& prune) {
        dfs(0, 0, visit, prune);
    }

    template <class Visit, class Prune>
    bool dfs(int r, long long ones, Visit& visit, Prune& prune) {
        if (r == m) {
            ++leaves;
            return visit(ones);
        }
        std::uint64_t limit = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            long long next = ones + std::popcount(mask);
            if (prune(next, r + 1)) {
                continue;
            }
            work.set_row_bits(r, mask);
            cur[r] = mask;
            if (contains_pattern_fast(work, sigma)) {
                continue;
            }
            if (dfs(r + 1, next, visit, prune)) {
                work.set_row_bits(r, 0);
                return true;
            }
        }
        work.set_row_bits(r, 0);
        return false;
    }
};

BinaryMatrix matrix_from_masks(int m, int n,
                               const std::vector<std::uint64_t>& masks) {
    BinaryMatrix a(m, n);
    for (int r = 0; r < m; ++r) {
        a.set_row_bits(r, masks[r]);
    }
    return a;
}

} // namespace

OracleReport brute_max_ones(int m, int n, const Permutation& sigma) {
    if (m < 1 || n < 1) {
        throw domain_error("matrix dimensions must be at least 1");
    }
    if (static_cast<long long>(m) * n > 25) {
        throw resource_error("brute_max_ones supports m*n <= 25");
    }
    AvoidingScan scan(m, n, sigma);
    long long best = -1;
    std::vector<std::uint64_t> best_masks(m, 0);
    scan.run(
        [&](long long ones) {
            if (ones > best) {
                best = ones;
                best_masks = scan.cur;
            }
            return false;
        },
        [&](long long ones, int next_row) {
            return ones + static_cast<long long>(m - next_row) * n <= best;
        });
    auto formula = max_ones_formula(m, n, sigma);
    std::optional<long long> formula_value;
    bool conjectured = false;
    if (formula) {
        formula_value = formula->first;
        conjectured = formula->second;
    }
    return OracleReport{m,
                        n,
                        sigma,
                        best,
                        formula_value,
                        conjectured,
                        formula_value && *formula_value == best,
                        matrix_from_masks(m, n, best_masks),
                        scan.leaves,
                        false,
                        true,
                        std::nullopt};
}

void for_each_maximal(int m, int n, const Permutation& sigma,
                      const std::function<void(const BinaryMatrix&)>& fn) {
    if (m < 1 || n < 1) {
        throw domain_error("matrix dimensions must be at least 1");
    }
    if (static_cast<long long>(m) * n > 20) {
        throw resource_error("for_each_maximal supports m*n <= 20");
    }
    AvoidingScan scan(m, n, sigma);
    scan.run(
        [&](long long) {
            if (validate_maximal(scan.work, sigma)) {
                fn(scan.work);
            }
            return false;
        },
        [](long long, int) { return false; });
}

std::vector<BinaryMatrix> enumerate_maximal(int m, int n,
                                            const Permutation& sigma) {
    std::vector<BinaryMatrix> out;
    for_each_maximal(m, n, sigma,
                     [&out](const BinaryMatrix& a) { out.push_back(a); });
    return out;
}

OracleReport check_conjecture_k1(int m, int n, int k) {
    if (k < 4 || m < k || n < k) {
        throw domain_error("conjecture check needs m, n >= k >= 4");
    }
    if (static_cast<long long>(m) * n > 25) {
        throw resource_error("check_conjecture_k1 supports m*n <= 25");
    }
    Permutation sigma = Permutation::rotation_k_first(k);
    OracleReport report = brute_max_ones(m, n, sigma);
    if (static_cast<long long>(m) * n <= 16) {
        // Saturation half: below the true maximum no avoiding matrix may
        // be maximal. The first offender in scan order is reported.
        report.saturation_checked = true;
        AvoidingScan scan(m, n, sigma);
        scan.run(
            [&](long long ones) {
                if (ones < report.exhaustive_max &&
                    validate_maximal(scan.work, sigma)) {
                    report.saturation_uniform = false;
                    report.sub_bound_maximal = scan.work;
                    return true;
                }
                return false;
            },
            [](long long, int) { return false; });
    }
    return report;
}

namespace {

// One pass over the dominated permutations of a fixed matrix: counts them
// all and flags whether any contains sigma. Aborts as soon as a
// containing one completes.
struct DominatedScan {
    const BinaryMatrix& a;
    int n;
    const Permutation& sigma;
    std::vector<int> prefix;
    unsigned long long count = 0;
    bool containing_found = false;

    void dfs(std::uint64_t used, int r, bool tainted) {
        if (r == n) {
            if (tainted) {
                containing_found = true;
            } else {
                ++count;
            }
            return;
        }
        std::uint64_t options = a.row_bits(r) & ~used;
        while (options && !containing_found) {
            int c = std::countr_zero(options);
            options &= options - 1;
            prefix.push_back(c + 1);
            bool next_tainted =
                tainted || sequence_gains_pattern_at_back(prefix, sigma);
            dfs(used | (std::uint64_t{1} << c), r + 1, next_tainted);
            prefix.pop_back();
        }
    }
};

} // namespace

OracleReport search_max_avoiding_permanent(int n, const Permutation& sigma,
                                           PermanentConstraint constraint) {
    if (n < 1) {
        throw domain_error("matrix dimension must be at least 1");
    }
    bool n5_ok = n == 5 && constraint == PermanentConstraint::permutation_avoiding;
    if (n > 4 && !n5_ok) {
        throw resource_error(
            "permanent search supports n <= 4, or n = 5 with the "
            "permutation_avoiding constraint");
    }
    BinaryMatrix work(n, n);
    std::vector<std::uint64_t> cur(n, 0);
    long long best = -1;
    std::vector<std::uint64_t> best_masks(n, 0);
    unsigned long long scanned = 0;

    auto evaluate = [&]() -> std::optional<long long> {
        switch (constraint) {
        case PermanentConstraint::none:
            break;
        case PermanentConstraint::total_support:
            if (work.ones() == 0 || !is_total_support(work)) {
                return std::nullopt;
            }
            break;
        case PermanentConstraint::fully_indecomposable:
            if (work.ones() == 0 || !is_fully_indecomposable(work)) {
                return std::nullopt;
            }
            break;
        case PermanentConstraint::permutation_avoiding: {
            DominatedScan scan{work, n, sigma, {}, 0, false};
            scan.dfs(0, 0, false);
            if (scan.containing_found) {
                return std::nullopt;
            }
            return static_cast<long long>(scan.count);
        }
        }
        return static_cast<long long>(
            avoiding_permanent(work, sigma, false).value);
    };

    // Odometer over row masks, ascending, row 0 most significant.
    std::uint64_t limit = std::uint64_t{1} << n;
    auto walk = [&](auto&& self, int r) -> void {
        if (r == n) {
            ++scanned;
            if (auto value = evaluate(); value && *value > best) {
                best = *value;
                best_masks = cur;
            }
            return;
        }
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            work.set_row_bits(r, mask);
            cur[r] = mask;
            self(self, r + 1);
        }
        work.set_row_bits(r, 0);
        cur[r] = 0;
    };
    walk(walk, 0);

    std::optional<long long> formula_value;
    if (constraint == PermanentConstraint::none) {
        // J_n dominates everything, so the unconstrained maximum is the
        // number of sigma-avoiding permutations of n.
        formula_value = static_cast<long long>(count_avoiding(n, sigma));
    }
    return OracleReport{n,
                        n,
                        sigma,
                        best,
                        formula_value,
                        false,
                        formula_value && *formula_value == best,
                        matrix_from_masks(n, n, best_masks),
                        scanned,
                        false,
                        true,
                        std::nullopt};
}

} // namespace patmat
