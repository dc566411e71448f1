#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "patmat/analytics.hpp"
#include "patmat/contains.hpp"

using namespace patmat;

namespace {

const std::vector<std::string> s3_words = {"123", "132", "213",
                                           "231", "312", "321"};

} // namespace

TEST_CASE("avoiding enumeration is lexicographic and Catalan-counted") {
    auto perms = enumerate_avoiding(3, Permutation::identity(3));
    REQUIRE(perms.size() == 5);
    CHECK(perms[0].word() == "132");
    CHECK(perms[1].word() == "213");
    CHECK(perms[2].word() == "231");
    CHECK(perms[3].word() == "312");
    CHECK(perms[4].word() == "321");

    auto only = enumerate_avoiding(4, Permutation::parse("12"));
    REQUIRE(only.size() == 1);
    CHECK(only[0].word() == "4321");

    for (const auto& word : s3_words) {
        Permutation sigma = Permutation::parse(word);
        for (int n = 1; n <= 7; ++n) {
            CAPTURE(word);
            CAPTURE(n);
            CHECK(count_avoiding(n, sigma) == catalan(n));
        }
    }

    // Streaming yields the same order as the collecting form.
    std::vector<std::string> streamed;
    for_each_avoiding(4, Permutation::parse("312"),
                      [&streamed](const Permutation& p) {
                          streamed.push_back(p.word());
                      });
    auto collected = enumerate_avoiding(4, Permutation::parse("312"));
    REQUIRE(streamed.size() == collected.size());
    for (std::size_t i = 0; i < streamed.size(); ++i) {
        CHECK(streamed[i] == collected[i].word());
    }
    CHECK(std::is_sorted(streamed.begin(), streamed.end()));

    CHECK(count_avoiding(5, Permutation::parse("1")) == 0);
    CHECK_THROWS_AS(enumerate_avoiding(0, Permutation::parse("12")),
                    domain_error);
}

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(catalan(8) == 1430);
    CHECK(catalan(30) == 3814986502092304ULL);
    CHECK(catalan(36) == 11959798385860453492ULL);
    CHECK_THROWS_WITH_AS(catalan(37), doctest::Contains("catalan_decimal"),
                         domain_error);
    CHECK_THROWS_AS(catalan(-1), domain_error);

    CHECK(catalan_decimal(8) == "1430");
    CHECK(catalan_decimal(36) == std::to_string(catalan(36)));
    CHECK(catalan_decimal(40) == "2622127042276492108820");
}

TEST_CASE("permanent") {
    for (int n = 1; n <= 8; ++n) {
        unsigned long long factorial = 1;
        for (int i = 2; i <= n; ++i) {
            factorial *= i;
        }
        CHECK(permanent(BinaryMatrix::all_ones(n, n)) == factorial);
    }
    CHECK(permanent(pattern_to_matrix(Permutation::identity(5))) == 1);
    CHECK(permanent(BinaryMatrix(4, 4)) == 0);
    CHECK(permanent(fixtures::matrix(fixtures::permanent12_5x5)) == 12);
    CHECK(permanent(parse_matrix("11\n11")) == 2);
    CHECK_THROWS_AS(permanent(BinaryMatrix(3, 4)), domain_error);
}

TEST_CASE("avoiding permanent") {
    BinaryMatrix j8 = BinaryMatrix::all_ones(8, 8);
    for (const auto& word : s3_words) {
        auto report = avoiding_permanent(j8, Permutation::parse(word), false);
        CAPTURE(word);
        CHECK(report.value == 1430);
        CHECK(report.witness_count == 1430);
        CHECK_FALSE(report.witnesses.has_value());
    }

    // Witnesses, when collected, are exactly the avoiding permutations in
    // enumeration order.
    auto report = avoiding_permanent(BinaryMatrix::all_ones(4, 4),
                                     Permutation::parse("312"), true);
    REQUIRE(report.witnesses.has_value());
    auto expected = enumerate_avoiding(4, Permutation::parse("312"));
    REQUIRE(report.witnesses->size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK((*report.witnesses)[i] == expected[i]);
    }

    // On a permutation-avoiding matrix the avoiding permanent equals the
    // ordinary permanent.
    BinaryMatrix guess = fixtures::matrix(fixtures::permanent12_5x5);
    auto guess_report = avoiding_permanent(guess, Permutation::parse("312"),
                                           false);
    CHECK(guess_report.value == permanent(guess));

    // An identity-dominating matrix loses the identity under avoidance.
    auto id_report = avoiding_permanent(pattern_to_matrix(
                                            Permutation::identity(3)),
                                        Permutation::identity(3), false);
    CHECK(id_report.value == 0);

    CHECK_THROWS_AS(
        avoiding_permanent(BinaryMatrix(2, 3), Permutation::parse("12"),
                           false),
        domain_error);
}

TEST_CASE("permutation-sense avoidance") {
    BinaryMatrix guess = fixtures::matrix(fixtures::permanent12_5x5);
    CHECK(is_sigma_permutation_avoiding(guess, Permutation::parse("312")));

    BinaryMatrix j3 = BinaryMatrix::all_ones(3, 3);
    for (const auto& word : s3_words) {
        CHECK_FALSE(is_sigma_permutation_avoiding(j3,
                                                  Permutation::parse(word)));
    }

    // A matrix with no dominated permutation avoids vacuously.
    BinaryMatrix stuck(2, 2);
    stuck.set(0, 0, true);
    stuck.set(1, 0, true);
    CHECK(is_sigma_permutation_avoiding(stuck, Permutation::parse("12")));

    CHECK_THROWS_AS(
        is_sigma_permutation_avoiding(BinaryMatrix(2, 3),
                                      Permutation::parse("12")),
        domain_error);
}

TEST_CASE("support predicates") {
    BinaryMatrix j3 = BinaryMatrix::all_ones(3, 3);
    CHECK(is_total_support(j3));
    CHECK(is_fully_indecomposable(j3));

    BinaryMatrix i3 = pattern_to_matrix(Permutation::identity(3));
    CHECK(is_total_support(i3));
    CHECK_FALSE(is_fully_indecomposable(i3));

    BinaryMatrix partial = parse_matrix("11\n10");
    CHECK_FALSE(is_total_support(partial)); // the (1,1) one is on no diagonal
    CHECK_FALSE(is_fully_indecomposable(partial));

    BinaryMatrix one(1, 1);
    one.set(0, 0, true);
    CHECK(is_total_support(one));
    CHECK(is_fully_indecomposable(one));

    CHECK_THROWS_AS(is_total_support(BinaryMatrix(3, 3)), domain_error);
    CHECK_THROWS_AS(is_fully_indecomposable(BinaryMatrix(3, 3)),
                    domain_error);
    CHECK_THROWS_AS(is_total_support(BinaryMatrix::all_ones(2, 3)),
                    domain_error);
}

TEST_CASE("grassmannian and reverse grassmannian tests") {
    CHECK(is_grassmannian(Permutation::identity(5)));
    CHECK(is_grassmannian(Permutation::parse("1324")));
    CHECK_FALSE(is_grassmannian(Permutation::parse("3142")));
    CHECK(is_reverse_grassmannian(Permutation::parse("4321")));
    CHECK(is_reverse_grassmannian(Permutation::parse("3214")));
    CHECK_FALSE(is_reverse_grassmannian(Permutation::parse("1324")));

    // 123-avoiding yet neither kind.
    Permutation p(std::vector<int>{5, 6, 3, 4, 1, 2});
    CHECK_FALSE(sequence_contains_pattern(p.values(),
                                          Permutation::identity(3)));
    CHECK_FALSE(is_grassmannian(p));
    CHECK_FALSE(is_reverse_grassmannian(p));
}

TEST_CASE("extending a partial sequence to an avoiding permutation") {
    auto w = extend_avoiding({4, 6, 1}, 6, Permutation::parse("312"));
    REQUIRE(w.has_value());
    CHECK(w->word() == "234561");

    // The documented witness is verifiable directly.
    Permutation hand(std::vector<int>{2, 4, 5, 6, 3, 1});
    CHECK_FALSE(sequence_contains_pattern(hand.values(),
                                          Permutation::parse("312")));
    std::vector<int> hand_word = hand.values();
    std::vector<int> target = {4, 6, 1};
    std::size_t ptr = 0;
    for (int v : hand_word) {
        if (ptr < target.size() && v == target[ptr]) {
            ++ptr;
        }
    }
    CHECK(ptr == target.size());

    // Result contains the subsequence in order and avoids the pattern.
    auto check_result = [](const Permutation& result,
                           const std::vector<int>& sub,
                           const Permutation& sigma) {
        CHECK_FALSE(sequence_contains_pattern(result.values(), sigma));
        std::size_t at = 0;
        for (int v : result.values()) {
            if (at < sub.size() && v == sub[at]) {
                ++at;
            }
        }
        CHECK(at == sub.size());
    };
    auto r2 = extend_avoiding({2, 1}, 5, Permutation::parse("123"));
    REQUIRE(r2.has_value());
    check_result(*r2, {2, 1}, Permutation::parse("123"));

    auto whole = extend_avoiding({3, 2, 1}, 3, Permutation::parse("123"));
    REQUIRE(whole.has_value());
    CHECK(whole->word() == "321");

    auto empty_sub = extend_avoiding({}, 4, Permutation::parse("231"));
    REQUIRE(empty_sub.has_value());
    CHECK(empty_sub->word() == "1234"); // lexicographically least avoider

    CHECK_THROWS_WITH_AS(
        extend_avoiding({3, 1, 2}, 5, Permutation::parse("312")),
        doctest::Contains("already contains"), domain_error);
    CHECK_THROWS_AS(extend_avoiding({7, 1}, 6, Permutation::parse("312")),
                    domain_error);
    CHECK_THROWS_AS(extend_avoiding({1, 1}, 4, Permutation::parse("312")),
                    domain_error);
}
