#include "plumbcalc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "plumbcalc/budding.hpp"
#include "plumbcalc/palf.hpp"
#include "plumbcalc/section3.hpp"
#include "plumbcalc/zerostrings.hpp"

namespace plumbcalc {

namespace {

std::string show(const CFString& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i].get_str();
    }
    return out + "]";
}

std::string show_factors(const std::vector<Int>& v) {
    if (v.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += "+";
        out += (v[i] == 0) ? "Z" : "Z" + v[i].get_str();
    }
    return out;
}

// all expansion strings with given length, entries in [2, max_entry]
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

CheckReport lemma_suite(int max_len, int max_entry, int zero_len) {
    CheckReport r;
    r.name = "lemmas";

    std::vector<CFString> all;
    for (int len = 1; len <= max_len; ++len)
        for_each_expansion(len, max_entry, [&](const CFString& s) { all.push_back(s); });
    r.note("expansion strings: " + std::to_string(all.size()));

    for (const CFString& s : all) {
        CFString m = cf_dual(s);

        // reversal compatibility of dual
        r.check(cf_dual(cf_reverse(s)) == cf_reverse(m), "dual/reverse commute at " + show(s));

        // first entries: a_1 = 2 iff m_1 != 2 (length >= 2)
        if (s.size() >= 2)
            r.check((s[0] == 2) != (m[0] == 2), "first-entry alternative at " + show(s));

        // increment head: [1+a_1,...] has dual [2, m...]
        {
            CFString t = s;
            t[0] += 1;
            CFString expect{Int(2)};
            expect.insert(expect.end(), m.begin(), m.end());
            r.check(cf_dual(t) == expect, "head increment at " + show(s));
        }

        // leading-twos structure: dual starts with exactly a_1 - 2 twos
        {
            long lead = s[0].get_si() - 2;
            bool ok = static_cast<long>(m.size()) >= lead;
            for (long i = 0; ok && i < lead; ++i) ok = (m[i] == 2);
            if (ok && s.size() >= 2) ok = (static_cast<long>(m.size()) > lead && m[lead] != 2);
            if (ok && s.size() == 1) ok = (static_cast<long>(m.size()) == lead + 1 && m[lead] == 2);
            r.check(ok, "leading twos at " + show(s));
        }

        // drop head: [a_2,...] has dual [m_{a_1 - 1} - 1, m_{a_1}, ...]
        if (s.size() >= 2) {
            CFString t(s.begin() + 1, s.end());
            long idx = s[0].get_si() - 1;  // 1-based position in m
            bool ok = static_cast<long>(m.size()) >= idx;
            if (ok) {
                CFString expect;
                expect.push_back(m[idx - 1] - 1);
                expect.insert(expect.end(), m.begin() + idx, m.end());
                ok = (cf_dual(t) == expect);
            }
            r.check(ok, "head drop at " + show(s));
        }

        // prepend a_0: dual gains a_0 - 2 twos then m_1 + 1
        for (long a0 = 2; a0 <= max_entry; ++a0) {
            CFString t{Int(a0)};
            t.insert(t.end(), s.begin(), s.end());
            CFString expect;
            for (long i = 0; i < a0 - 2; ++i) expect.push_back(2);
            expect.push_back(m[0] + 1);
            expect.insert(expect.end(), m.begin() + 1, m.end());
            r.check(cf_dual(t) == expect, "prepend at " + show(t));
        }

        // budding compatibility: dual(bud_left(s)) = bud_right(dual(s))
        r.check(cf_dual(bud_left(s)) == bud_right(m), "budding duality at " + show(s));
    }

    // concatenation and its converse splitting
    std::size_t pairs = 0;
    for (const CFString& s : all) {
        for (const CFString& t : all) {
            if (static_cast<int>(s.size() + t.size()) > max_len) continue;
            ++pairs;
            CFString joint = s;
            joint.insert(joint.end(), t.begin(), t.end());
            CFString ds = cf_dual(s), dt = cf_dual(t), dj = cf_dual(joint);
            CFString expect(ds.begin(), ds.end() - 1);
            expect.push_back(ds.back() + dt.front() - 1);
            expect.insert(expect.end(), dt.begin() + 1, dt.end());
            r.check(dj == expect, "concatenation dual at " + show(s) + "+" + show(t));
            // split form: at i = len(ds), a_i' + a_i'' - 1 = a_i with matching flanks
            std::size_t i = ds.size();
            bool ok = dj.size() == ds.size() + dt.size() - 1 &&
                      std::equal(dj.begin(), dj.begin() + (i - 1), ds.begin()) &&
                      std::equal(dj.begin() + i, dj.end(), dt.begin() + 1) &&
                      ds.back() + dt.front() - 1 == dj[i - 1];
            r.check(ok, "split recovery at " + show(s) + "+" + show(t));
        }
    }
    r.note("concatenation pairs: " + std::to_string(pairs));

    // blowup/budding lemmas over zero strings
    static const CFString k212{Int(2), Int(1), Int(2)};
    static const CFString k121{Int(1), Int(2), Int(1)};
    std::size_t zeros = 0;
    for (int n = 1; n <= zero_len; ++n) {
        for (const CFString& s : enumerate_zero_strings(n)) {
            ++zeros;
            if (n >= 2)
                r.check(ones_count(s) >= 1, "zero string of length >= 2 has a 1 at " + show(s));
            r.check(is_zero_string(cf_reverse(s)), "reversal closure at " + show(s));

            const bool of212 = is_blowup_of(s, k212);
            const bool of121 = is_blowup_of(s, k121);
            const int ones = ones_count(s);

            // one possible debudding, equal to 0; both buddings equal to 0
            if (of212 && ones == 1) {
                auto ds = debud(s);
                r.check(ds.size() == 1 && is_zero_string(ds.front()),
                        "unique zero debudding at " + show(s));
                r.check(is_zero_string(bud_left(s)) && is_zero_string(bud_right(s)),
                        "buddings stay zero at " + show(s));
            }

            // budding of [2,1,2] iff blowup of [2,1,2] with exactly one 1
            if (n >= 3)
                r.check(is_budding_of(s, k212) == (of212 && ones == 1),
                        "budding characterization at " + show(s));

            // boundary entry 1 forces blowup of [1,2,1]
            if (n >= 3 && (s.front() == 1 || s.back() == 1))
                r.check(of121, "boundary 1 forces [1,2,1] at " + show(s));

            // blowups of [2,1,2] that avoid [1,2,1]: padding by 2 keeps the value 0,
            // and the incremented tail evaluates to 1/2
            if (n >= 3 && base_type(s) == BaseType::blowup_of_212_only) {
                r.check(is_zero_string(bud_left(s)) && is_zero_string(bud_right(s)),
                        "padded strings stay zero at " + show(s));
                r.check(plus_one_tail_value(s) == Rational(Int(1), Int(2)),
                        "tail increment value 1/2 at " + show(s));
            }
        }
    }
    r.note("zero strings: " + std::to_string(zeros));
    return r;
}

CheckReport palf_seed_suite() {
    CheckReport r;
    r.name = "palf-seed";
    const std::vector<Int> z45{Int(45)};

    Factorization x = seed_x_system();
    Factorization target = seed_abcdef();
    r.check(euler_char_palf(x) == 5, "x-system euler = 5");
    r.check(euler_char_palf(target) == 2, "abcdef euler = 2");
    r.check(boundary_h1_palf(x) == z45, "x-system boundary " + show_factors(boundary_h1_palf(x)));
    r.check(boundary_h1_palf(target) == z45,
            "abcdef boundary " + show_factors(boundary_h1_palf(target)));

    // lantern on x3 y x4 x5, then daisy on x0^2 x1 x2 z x5
    Factorization mid = lantern_substitute(x, 4, 6, 5, 7);
    r.check(euler_char_palf(mid) == 4, "post-lantern euler = 4");
    r.check(boundary_h1_palf(mid) == z45, "post-lantern boundary preserved");
    Factorization fin = daisy_substitute(mid, {0, 1}, {2, 3, 4}, 7);
    r.check(euler_char_palf(fin) == 2, "post-daisy euler = 2");
    r.check(boundary_h1_palf(fin) == z45, "post-daisy boundary preserved");

    auto sorted = [](Factorization f) {
        std::sort(f.twists.begin(), f.twists.end());
        return f.twists;
    };
    r.check(sorted(fin) == sorted(target), "reduction lands on the 6-twist system");

    KeyPairReport pair = key_pair_check(x, fin);
    r.check(pair.boundary_equal && pair.euler_c == 5 && pair.euler_b == 2,
            "seed pair certificate");
    return r;
}

CheckReport section3_suite() {
    CheckReport r;
    r.name = "section3";
    const Section3Data& d = section3_data();

    r.check(pairing(d.alpha, d.alpha) == 2, "alpha.alpha = 2");
    r.check(pairing(d.k_class, d.alpha) == -6, "K.alpha = -6");
    r.check(pairing(d.h_class, d.alpha) == 10, "h.alpha = 10");
    r.check(pairing(d.k_class, d.h_class) == 3, "K.h = 3");
    for (int i = 0; i < 11; ++i)
        r.check(pairing(d.alpha, d.u[i]) == 0, "alpha.u" + std::to_string(i + 1) + " = 0");

    ChiSigma x = glue_invariants({Int(19), Int(-15)}, {Int(12), Int(-11)}, {Int(2), Int(-1)});
    r.check(x == ChiSigma{Int(9), Int(-5)}, "glue arithmetic (19,-15)-(12,-11)+(2,-1)");
    r.check(x.sigma % 16 != 0, "sigma = -5 not divisible by 16 (odd intersection form)");

    for (int n = 2; n <= 12; ++n) {
        auto ab = abelianization(meridian_presentation(n));
        r.check(ab == std::vector<Int>{Int(2 * n - 1)},
                "meridian presentation n=" + std::to_string(n) + " abelianizes to Z" +
                    std::to_string(2 * n - 1));
    }

    IntMatrix m1445(1, 1);
    m1445.at(0, 0) = 1445;
    r.check(boundary_class_order(m1445, {Int(782)}) == 85, "order of 782 in Z1445 is 85");
    r.check(Int(782) % 17 == 0, "17 divides 782");

    GramReport g = section3_gram_report();
    std::string rendered = render_gram_report(g);
    r.check(rendered == render_gram_report(section3_gram_report()), "gram report deterministic");
    std::istringstream lines(rendered);
    std::string line;
    while (std::getline(lines, line)) r.note("report: " + line);
    return r;
}

CheckReport casson_harer_suite(int pmax) {
    CheckReport r;
    r.name = "casson-harer";
    std::size_t tested = 0;
    for (long p = 2; p <= pmax; ++p) {
        for (long q = 1; q < p; ++q) {
            Int g;
            Int ip(p), iq(q);
            mpz_gcd(g.get_mpz_t(), ip.get_mpz_t(), iq.get_mpz_t());
            if (g != 1) continue;
            ++tested;
            LensSpace lens{ip, iq};
            bool ball = has_filling_with_euler(lens, 1);
            bool pred = casson_harer_predicate(lens);
            if (ball != pred)
                r.check(false, "L(" + std::to_string(p) + "," + std::to_string(q) +
                                   "): filling oracle " + (ball ? "1" : "0") + " vs predicate " +
                                   (pred ? "1" : "0"));
        }
    }
    r.checks = tested;
    r.note("lens spaces tested: " + std::to_string(tested));
    return r;
}

std::string render_theorem1_report(const Theorem1Report& r) {
    std::ostringstream os;
    os << "theorem1 bounds: length <= " << r.max_len << ", entries <= " << r.max_entry << "\n";
    os << "sequences searched: " << r.searched << (r.complete ? "" : " (budget hit, partial)")
       << "\n";
    os << "2-replaceable: " << r.replaceable << ", family members: " << r.family << "\n";
    for (const auto& x : r.only_oracle) {
        os << "REPLACEABLE BUT NOT GENERATED: " << show(x.framings) << " dual "
           << show(x.dual_string) << " witness " << show(x.witness.zero_string) << " form "
           << x.witness.form << "\n";
    }
    for (const auto& x : r.only_family) {
        os << "GENERATED BUT NOT REPLACEABLE: " << show(x.framings) << " (family "
           << family_tag_name(x.tag) << ")\n";
    }
    os << (r.success() ? "difference sets empty: classification verified in range"
                       : "MISMATCH: classification and oracle disagree")
       << "\n";
    return os.str();
}

}  // namespace plumbcalc
