#include <doctest.h>

#include <numeric>
#include <random>

#include "plumbcalc/cfrac.hpp"

using namespace plumbcalc;

namespace {

CFString cs(std::initializer_list<long> xs) {
    CFString s;
    for (long x : xs) s.push_back(Int(x));
    return s;
}

template <typename F>
void for_each_expansion(int len, int max_entry, F&& fn) {
    CFString s(len, Int(2));
    while (true) {
        fn(s);
        int pos = len - 1;
        while (pos >= 0 && s[pos] == max_entry) {
            s[pos] = 2;
            --pos;
        }
        if (pos < 0) break;
        s[pos] += 1;
    }
}

}  // namespace

TEST_CASE("cf_eval worked values") {
    CHECK(cf_eval(cs({2, 4, 4, 2})) == Rational(Int(45), Int(26)));
    CHECK(cf_eval(cs({2, 1, 3})) == Rational(Int(1), Int(2)));
    CHECK(cf_eval(cs({2, 1, 2})).is_zero());
    CHECK(cf_eval(cs({1, 1})).is_zero());
    CHECK(cf_eval(cs({0})).is_zero());
    for (long m : {-3L, 0L, 1L, 7L}) CHECK(cf_eval(cs({m})) == Rational(Int(m)));
}

TEST_CASE("cf_eval rejects vanishing partial values") {
    std::size_t idx = 0;
    CHECK(!try_cf_eval(cs({2, 1, 1}), &idx).has_value());
    CHECK(idx == 2);
    CHECK_THROWS_AS(cf_eval(cs({2, 1, 1})), not_admissible);
    CHECK_THROWS_AS(cf_eval(CFString{}), std::invalid_argument);
    // [1,1] evaluates to 0 but dividing into it fails one level up
    CHECK(!try_cf_eval(cs({5, 1, 1}), &idx).has_value());
    CHECK(idx == 2);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(cs({0})));
    CHECK(is_admissible(cs({2, 1, 2})));
    CHECK(!is_admissible(cs({2, 1, 1})));
    CHECK(!is_admissible(cs({1, 0, 2})));
    CHECK(is_admissible_zero(cs({2, 1, 2})));
    CHECK(!is_admissible_zero(cs({2, 2, 2})));
}

TEST_CASE("cf_expand worked values and rejection") {
    CHECK(cf_expand(Rational(Int(45), Int(26))) == cs({2, 4, 4, 2}));
    CHECK(cf_expand(Rational(Int(297), Int(122))) == cs({3, 2, 5, 2, 2, 6}));
    CHECK(cf_expand(Rational(Int(2))) == cs({2}));
    CHECK_THROWS_AS(cf_expand(Rational(Int(1))), std::domain_error);
    CHECK_THROWS_AS(cf_expand(Rational(Int(3), Int(4))), std::domain_error);
    CHECK_THROWS_AS(cf_expand(Rational(Int(-5))), std::domain_error);
}

TEST_CASE("cf_dual worked values") {
    CHECK(cf_dual(cs({3, 2, 5, 2, 2, 6})) == cs({2, 4, 2, 2, 5, 2, 2, 2, 2}));
    CHECK(cf_eval(cf_dual(cs({3, 2, 5, 2, 2, 6}))) == Rational(Int(297), Int(175)));
    CHECK(cf_dual(cs({3, 2, 3, 2, 3})) == cs({2, 4, 4, 2}));
    CHECK(cf_dual(cs({2, 3, 2})) == cs({3, 3}));
    for (long m = 2; m <= 9; ++m) {
        CFString expect(static_cast<std::size_t>(m - 1), Int(2));
        CHECK(cf_dual(cs({m})) == expect);
    }
    CHECK_THROWS_AS(cf_dual(cs({2, 1, 2})), std::domain_error);
    CHECK_THROWS_AS(cf_dual(CFString{}), std::domain_error);
}

TEST_CASE("cf_reverse and mod_inverse") {
    CHECK(cf_reverse(cs({3, 2, 5, 2, 2, 6})) == cs({6, 2, 2, 5, 2, 3}));
    CHECK(cf_reverse(cs({7})) == cs({7}));
    CHECK(cf_reverse(cs({2, 4, 4, 2})) == cs({2, 4, 4, 2}));
    CHECK(mod_inverse(Int(26), Int(45)) == 26);
    CHECK(mod_inverse(Int(1), Int(97)) == 1);
    CHECK_THROWS_AS(mod_inverse(Int(6), Int(45)), std::domain_error);

    // brute scan: q*qbar = 1 mod p for every coprime pair with p <= 200
    for (long p = 2; p <= 200; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Int qb = mod_inverse(Int(q), Int(p));
            CHECK(qb >= 1);
            CHECK(qb < p);
            CHECK((qb * q) % p == 1);
        }
}

TEST_CASE("reversal inverts the denominator mod p") {
    // if [a_1..a_n] = p/q then [a_n..a_1] = p/qbar
    for_each_expansion(4, 5, [&](const CFString& s) {
        Rational v = cf_eval(s);
        Rational w = cf_eval(cf_reverse(s));
        CHECK(w.num() == v.num());
        CHECK(w.den() == mod_inverse(v.den(), v.num()));
    });
}

TEST_CASE("expand/eval round trip for all p <= 1000") {
    for (long p = 2; p <= 1000; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            Rational r{Int(p), Int(q)};
            CFString s = cf_expand(r);
            CHECK(is_expansion_string(s));
            CHECK(cf_eval(s) == r);
        }
    }
}

TEST_CASE("dual is an involution and satisfies the length/sum identity, length <= 8") {
    for (int len = 1; len <= 8; ++len) {
        for_each_expansion(len, 6, [&](const CFString& s) {
            CFString m = cf_dual(s);
            CHECK(cf_dual(m) == s);
            Int sum_s = 0, sum_m = 0;
            for (const Int& a : s) sum_s += a;
            for (const Int& a : m) sum_m += a;
            CHECK(sum_s + sum_m == 3 * Int(static_cast<long>(s.size() + m.size())) - 2);
        });
    }
}

TEST_CASE("dual pairs expand p/q and p/(p-q)") {
    for_each_expansion(5, 6, [&](const CFString& s) {
        Rational v = cf_eval(s);
        CHECK(cf_eval(cf_dual(s)) == Rational(v.num(), v.num() - v.den()));
    });
    DualPair d = dual_pair(cs({2, 4, 4, 2}));
    CHECK(d.p == 45);
    CHECK(d.q == 26);
    CHECK(d.right == cs({3, 2, 3, 2, 3}));
    CHECK(cf_eval(d.right) == Rational(d.p, d.p - d.q));
}

TEST_CASE("continuants match evaluation") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> len(1, 9), entry(-4, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        CFString s(len(rng));
        for (auto& a : s) a = entry(rng);
        auto suf = suffix_continuants(s);
        auto pre = prefix_continuants(s);
        CHECK(pre[s.size()] == suf[1]);
        auto v = try_cf_eval(s);
        if (v) {
            for (std::size_t j = 2; j <= s.size(); ++j) CHECK(suf[j] != 0);
            CHECK(Rational(suf[1], suf[2]) == *v);
        }
    }
}
