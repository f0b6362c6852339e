#include <doctest.h>

#include <numeric>

#include "plumbcalc/lisca.hpp"
#include "plumbcalc/plumbing.hpp"
#include "plumbcalc/section3.hpp"

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

TEST_CASE("intersection matrices") {
    IntMatrix m = intersection_matrix(linear_chain(cs({2, 4, 4, 2})));
    CHECK(m.rows == 4);
    CHECK(m.at(0, 0) == -2);
    CHECK(m.at(1, 1) == -4);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 0);
    CHECK(det_bareiss(m) == 45);

    IntMatrix one = intersection_matrix(linear_chain(cs({7})));
    CHECK(one.rows == 1);
    CHECK(one.at(0, 0) == -7);

    PlumbingTree star;
    star.vertices = {{1, Int(-3)}, {2, Int(-2)}, {3, Int(-2)}, {4, Int(-2)}};
    star.edges = {{1, 2}, {1, 3}, {1, 4}};
    IntMatrix sm = intersection_matrix(star);
    int offdiag = 0;
    for (int j = 1; j < 4; ++j) offdiag += static_cast<int>(sm.at(0, j).get_si());
    CHECK(offdiag == 3);
    CHECK(plumbing_euler(star) == 5);
}

TEST_CASE("tree validation") {
    PlumbingTree bad;
    bad.vertices = {{1, Int(-2)}, {2, Int(-2)}, {3, Int(-2)}};
    bad.edges = {{1, 2}, {2, 3}, {3, 1}};
    CHECK_THROWS_AS(validate_tree(bad), std::invalid_argument);
    bad.edges = {{1, 2}};
    CHECK_THROWS_AS(validate_tree(bad), std::invalid_argument);
    bad.edges = {{1, 2}, {2, 3}};
    CHECK_NOTHROW(validate_tree(bad));
    bad.vertices.push_back({1, Int(-2)});
    CHECK_THROWS_AS(validate_tree(bad), std::invalid_argument);
}

TEST_CASE("boundary homology of chains") {
    CHECK(boundary_h1(linear_chain(cs({2, 4, 4, 2}))) == std::vector<Int>{Int(45)});
    for (long z = 2; z <= 9; ++z)
        CHECK(boundary_h1(linear_chain(cs({z}))) == std::vector<Int>{Int(z)});
    // (4) budded twice: boundary order still matches the numerator
    CFString g = cs({2, 2, 6});
    CHECK(boundary_h1(linear_chain(g)) == std::vector<Int>{boundary_of(g).p});
}

TEST_CASE("|det| of a chain equals the continued fraction numerator (length <= 6)") {
    for (int len = 1; len <= 6; ++len)
        for_each_expansion(len, 5, [&](const CFString& f) {
            Int d = det_bareiss(intersection_matrix(linear_chain(f)));
            CHECK(abs(d) == boundary_of(f).p);
            Inertia s = signature_exact(intersection_matrix(linear_chain(f)));
            CHECK(s.negative == len);
            CHECK(s.positive == 0);
        });
}

TEST_CASE("abelianization") {
    Presentation one;
    one.generators = 1;
    one.relators = {{1}};
    CHECK(abelianization(one).empty());

    CHECK(abelianization(meridian_presentation(9)) == std::vector<Int>{Int(17)});
    for (int n = 2; n <= 12; ++n)
        CHECK(abelianization(meridian_presentation(n)) == std::vector<Int>{Int(2 * n - 1)});

    Presentation free2;
    free2.generators = 2;
    CHECK(abelianization(free2) == std::vector<Int>{Int(0), Int(0)});

    Presentation bad;
    bad.generators = 2;
    bad.relators = {{3}};
    CHECK_THROWS_AS(abelianization(bad), std::invalid_argument);
}

TEST_CASE("ambient pairing") {
    const Section3Data& d = section3_data();
    CHECK(pairing(d.h_class, d.h_class) == 1);
    CHECK(pairing(d.alpha, d.alpha) == 2);
    CHECK(pairing(d.k_class, d.alpha) == -6);
    CHECK(pairing(d.h_class, d.alpha) == 10);
    for (const auto& u : d.u) CHECK(pairing(d.alpha, u) == 0);
    AmbientClass small{Int(1), {Int(1)}};
    CHECK_THROWS_AS(pairing(small, d.h_class), std::invalid_argument);

    IntMatrix g = gram_matrix({d.h_class});
    CHECK(g.rows == 1);
    CHECK(g.at(0, 0) == 1);
}

TEST_CASE("boundary class order") {
    IntMatrix m45(1, 1);
    m45.at(0, 0) = 45;
    for (long k = 0; k <= 45; ++k) {
        Int expect = k == 0 ? Int(1) : Int(45) / Int(std::gcd(45L, k));
        CHECK(boundary_class_order(m45, {Int(k)}) == expect);
    }
    IntMatrix sing(2, 2);
    CHECK_THROWS_AS(boundary_class_order(sing, {Int(1), Int(1)}), std::domain_error);

    IntMatrix m1445(1, 1);
    m1445.at(0, 0) = 1445;
    CHECK(boundary_class_order(m1445, {Int(782)}) == 85);
}

TEST_CASE("glue invariants") {
    ChiSigma got = glue_invariants({Int(19), Int(-15)}, {Int(12), Int(-11)}, {Int(2), Int(-1)});
    CHECK(got == ChiSigma{Int(9), Int(-5)});
    ChiSigma same{Int(7), Int(-3)};
    CHECK(glue_invariants(same, same, same) == same);
    CHECK(glue_invariants({Int(19), Int(-15)}, {Int(12), Int(-11)}, {Int(1), Int(0)}) ==
          ChiSigma{Int(8), Int(-4)});
}

TEST_CASE("section 3 gram report is deterministic and flags the caveat") {
    GramReport r = section3_gram_report();
    CHECK(r.diagonal_matches);
    CHECK(r.signature_matches);
    CHECK(!r.det_matches);
    CHECK(!r.order_matches);
    REQUIRE(r.offenders.size() == 1);
    CHECK(r.offenders[0].i == 1);
    CHECK(r.offenders[0].j == 3);
    CHECK(r.offenders[0].value == -1);
    CHECK(render_gram_report(r) == render_gram_report(section3_gram_report()));
}

TEST_CASE("negative definiteness of family members") {
    auto fam = theorem1_families(5, 6);
    for (const auto& [m, tag] : fam) {
        Inertia s = signature_exact(intersection_matrix(linear_chain(m)));
        CHECK(s.positive == 0);
        CHECK(s.zero == 0);
    }
}
