#include "plumbcalc/cfrac.hpp"

#include <algorithm>

namespace plumbcalc {

std::optional<Rational> try_cf_eval(const CFString& s, std::size_t* fail_index) {
    if (s.empty()) throw std::invalid_argument("cf_eval: empty string");
    Rational r(s.back());
    for (std::size_t i = s.size() - 1; i-- > 0;) {
        if (r.is_zero()) {
            if (fail_index) *fail_index = i + 2;  // r_{i+2} in 1-based terms
            return std::nullopt;
        }
        r = Rational(s[i]) - r.inverse();
    }
    return r;
}

Rational cf_eval(const CFString& s) {
    std::size_t idx = 0;
    auto v = try_cf_eval(s, &idx);
    if (!v) throw not_admissible(idx);
    return *v;
}

bool is_admissible(const CFString& s) {
    if (s.empty()) return false;
    if (s.size() == 1 && s[0] == 0) return true;
    for (const Int& a : s)
        if (a < 1) return false;
    return try_cf_eval(s).has_value();
}

bool is_admissible_zero(const CFString& s) {
    if (s.empty()) return false;
    if (s.size() == 1) return s[0] == 0;
    for (const Int& a : s)
        if (a < 1) return false;
    // K(i..n) built right to left; admissible iff all K(j..n) != 0 for j >= 2,
    // zero iff K(1..n) == 0.
    Int kc = 1, kp = 0, t;
    for (std::size_t i = s.size(); i-- > 0;) {
        t = s[i] * kc - kp;
        kp = kc;
        kc = t;
        if (i >= 1 && kc == 0) return false;
    }
    return kc == 0;
}

bool is_expansion_string(const CFString& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](const Int& a) { return a >= 2; });
}

CFString cf_expand(const Rational& r) {
    if (r <= Rational(1)) throw std::domain_error("cf_expand: value must exceed 1");
    Int p = r.num(), q = r.den();
    CFString out;
    while (true) {
        Int a, rem;
        mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        out.push_back(a);
        Int next = a * q - p;
        if (next == 0) break;
        p = q;
        q = next;
    }
    return out;
}

CFString cf_dual(const CFString& s) {
    if (!is_expansion_string(s))
        throw std::domain_error("cf_dual: requires a nonempty string with all entries >= 2");
    CFString w = s;  // working copy, consumed left to right
    CFString out;
    std::size_t lo = 0;  // w[lo..] is the live sequence
    while (true) {
        // step 1: leading entry != 2 contributes (a_1 - 2) twos and becomes 2
        if (w[lo] != 2) {
            for (Int c = w[lo] - 2; c > 0; --c) out.push_back(2);
            w[lo] = 2;
        }
        // step 2: run of k leading twos; if the whole sequence is twos the final
        // entry of the dual is n+1, otherwise emit k+2 and continue past the run
        std::size_t k = 0;
        while (lo + k < w.size() && w[lo + k] == 2) ++k;
        if (lo + k == w.size()) {
            out.push_back(Int(static_cast<long>(w.size() - lo) + 1));
            return out;
        }
        out.push_back(Int(static_cast<long>(k) + 2));
        lo += k;
        w[lo] -= 1;
    }
}

CFString cf_reverse(const CFString& s) {
    return CFString(s.rbegin(), s.rend());
}

DualPair dual_pair(const CFString& expansion_of_p_over_q) {
    DualPair d;
    d.left = expansion_of_p_over_q;
    d.right = cf_dual(expansion_of_p_over_q);
    Rational v = cf_eval(d.left);
    d.p = v.num();
    d.q = v.den();
    return d;
}

Int mod_inverse(const Int& q, const Int& p) {
    if (!(q > 0 && q < p)) throw std::domain_error("mod_inverse: need 0 < q < p");
    Int r;
    if (mpz_invert(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("mod_inverse: arguments not coprime");
    return r;
}

std::vector<Int> prefix_continuants(const CFString& s) {
    const std::size_t n = s.size();
    std::vector<Int> p(n + 1);
    p[0] = 1;
    Int prev2 = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        p[j] = s[j - 1] * p[j - 1] - prev2;
        prev2 = p[j - 1];
    }
    return p;
}

std::vector<Int> suffix_continuants(const CFString& s) {
    const std::size_t n = s.size();
    std::vector<Int> suf(n + 3);
    suf[n + 2] = 0;
    suf[n + 1] = 1;
    for (std::size_t i = n; i >= 1; --i) suf[i] = s[i - 1] * suf[i + 1] - suf[i + 2];
    suf[0] = 0;
    return suf;
}

}  // namespace plumbcalc
