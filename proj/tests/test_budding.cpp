#include <doctest.h>

#include <random>
#include <set>

#include "plumbcalc/budding.hpp"
#include "plumbcalc/zerostrings.hpp"

using namespace plumbcalc;

namespace {

CFString cs(std::initializer_list<long> xs) {
    CFString s;
    for (long x : xs) s.push_back(Int(x));
    return s;
}

// independent closure oracle: walk every L/R budding word of length <= depth
void closure_by_words(const CFString& s, int max_len, std::set<CFString>& out) {
    out.insert(s);
    if (static_cast<int>(s.size()) >= max_len) return;
    closure_by_words(bud_left(s), max_len, out);
    closure_by_words(bud_right(s), max_len, out);
}

}  // namespace

TEST_CASE("budding rules") {
    CHECK(bud_left(cs({4})) == cs({2, 5}));
    CHECK(bud_right(cs({4})) == cs({5, 2}));
    CHECK(bud_left(cs({2, 1, 2})) == cs({2, 2, 1, 3}));
    CHECK(bud_right(cs({2, 1, 2})) == cs({3, 1, 2, 2}));
    CHECK(bud_left(cs({2, 4, 4, 2})) == cs({2, 2, 4, 4, 3}));
    CHECK(bud_right(cs({2, 4, 4, 2})) == cs({3, 4, 4, 2, 2}));
    CHECK_THROWS_AS(bud_left(CFString{}), std::invalid_argument);
}

TEST_CASE("debudding candidates") {
    auto d1 = debud(cs({2, 2, 1, 3}));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0] == cs({2, 1, 2}));
    auto d2 = debud(cs({2, 4, 4, 2}));
    REQUIRE(d2.size() == 2);
    CHECK(d2[0] == cs({4, 4, 1}));
    CHECK(d2[1] == cs({1, 4, 4}));
    CHECK(debud(cs({3, 3})).empty());
    CHECK(debud(cs({5})).empty());
    // both ends qualify but the two branches coincide: one candidate, not two
    auto d3 = debud(cs({2, 1, 2}));
    REQUIRE(d3.size() == 1);
    CHECK(d3[0] == cs({1, 1}));
}

TEST_CASE("is_budding_of") {
    CHECK(is_budding_of(cs({2, 2, 1, 3}), cs({2, 1, 2})));
    CHECK(is_budding_of(cs({2, 2, 4, 4, 3}), cs({2, 4, 4, 2})));
    CHECK(!is_budding_of(cs({3, 1, 3, 1, 3}), cs({2, 1, 2})));
    CHECK(is_budding_of(cs({4}), cs({4})));
}

TEST_CASE("budding closure matches the word-walk oracle") {
    auto c2 = budding_closure(cs({4}), 2);
    CHECK(c2 == std::vector<CFString>{cs({4}), cs({2, 5}), cs({5, 2})});
    auto c3 = budding_closure(cs({4}), 3);
    std::set<CFString> want{cs({4}), cs({2, 5}), cs({5, 2}), cs({2, 2, 6}), cs({3, 5, 2}),
                            cs({2, 5, 3}), cs({6, 2, 2})};
    CHECK(std::set<CFString>(c3.begin(), c3.end()) == want);
    for (int max_len = 1; max_len <= 8; ++max_len) {
        std::set<CFString> oracle;
        closure_by_words(cs({4}), max_len, oracle);
        auto got = budding_closure(cs({4}), max_len);
        CHECK(std::set<CFString>(got.begin(), got.end()) == oracle);
        // every member debuds back to (4)
        for (const auto& m : got) CHECK(is_budding_of(m, cs({4})));
    }
}

TEST_CASE("buddings and debuddings preserve admissibility on the classes in use") {
    // Admissibility alone is not enough: [1,2,1] is an admissible zero string
    // whose right budding [2,2,1,2] divides into the vanishing partial [2,1,2].
    CHECK(is_admissible(cs({1, 2, 1})));
    CHECK(!is_admissible(cs({2, 2, 1, 2})));
    CHECK(bud_right(cs({1, 2, 1})) == cs({2, 2, 1, 2}));

    // expansion strings
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> len(1, 8), entry(2, 6);
    for (int trial = 0; trial < 1500; ++trial) {
        CFString s(len(rng));
        for (auto& a : s) a = entry(rng);
        CHECK(is_admissible(bud_left(s)));
        CHECK(is_admissible(bud_right(s)));
        for (const CFString& d : debud(s)) CHECK(is_admissible(d));
    }
    // blowups of [2,1,2] with exactly one 1, where the buddings are applied
    const CFString base = cs({2, 1, 2});
    for (int n = 3; n <= 9; ++n)
        for (const CFString& s : enumerate_zero_strings(n)) {
            if (!(is_blowup_of(s, base) && ones_count(s) == 1)) continue;
            CHECK(is_admissible(bud_left(s)));
            CHECK(is_admissible(bud_right(s)));
            for (const CFString& d : debud(s)) CHECK(is_admissible(d));
        }
}

TEST_CASE("budding characterization of one-1 zero strings (length <= 9)") {
    const CFString base = cs({2, 1, 2});
    for (int n = 3; n <= 9; ++n)
        for (const CFString& s : enumerate_zero_strings(n)) {
            bool lhs = is_budding_of(s, base);
            bool rhs = is_blowup_of(s, base) && ones_count(s) == 1;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("one-replaceability") {
    CHECK(is_one_replaceable(cs({4})));
    CHECK(is_one_replaceable(cs({2, 5})));
    CHECK(is_one_replaceable(cs({5, 2})));
    CHECK(!is_one_replaceable(cs({3, 3})));
    CHECK(!is_one_replaceable(cs({2, 4, 4, 2})));
    CHECK_THROWS_AS(is_one_replaceable(cs({1, 4})), std::domain_error);
}
