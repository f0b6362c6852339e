#include "plumbcalc/lisca.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "plumbcalc/budding.hpp"

namespace plumbcalc {

LensSpace lens_space(const Int& p, const Int& q) {
    if (!(p > q && q > 0)) throw std::domain_error("lens_space: need 0 < q < p");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::domain_error("lens_space: p and q must be coprime");
    return LensSpace{p, q};
}

LensSpace boundary_of(const CFString& framings) {
    if (!is_expansion_string(framings))
        throw std::domain_error("boundary_of: framing entries must all be >= 2");
    Rational v = cf_eval(framings);
    return lens_space(v.num(), v.den());
}

namespace {

CFString dual_string_of(const LensSpace& lens) {
    return cf_expand(Rational(lens.p, lens.p - lens.q));
}

// Depth-first enumeration of dominated zero strings with deficit <= max_deficit,
// built right to left on integer continuants. Suffix continuants of the partial
// candidate must stay nonzero (admissibility); a completed candidate must have
// vanishing total continuant and pass the blowup-closure reachability test.
// sink returns false to stop the search.
class DominatedSearch {
public:
    DominatedSearch(const CFString& dual, Int max_deficit,
                    std::function<bool(const CFString&, const Int&)> sink)
        : d_(dual), max_deficit_(std::move(max_deficit)), sink_(std::move(sink)) {}

    void run() {
        const std::size_t n = d_.size();
        if (n == 1) {
            // the only length-1 zero string is [0]
            if (d_[0] <= max_deficit_) sink_(CFString{Int(0)}, d_[0]);
            return;
        }
        cand_.assign(n, Int(0));
        prefix_ = prefix_continuants(d_);
        descend(n, Int(0), Int(1), Int(0));
    }

private:
    // i: 1-based position about to be chosen (we have chosen a_{i+1}..a_n);
    // kc = K(i+1..n), kp = K(i+2..n) for the partial candidate.
    bool descend(std::size_t i, const Int& spent, const Int& kc, const Int& kp) {
        if (i == 0) {
            if (kc != 0) return true;
            if (!is_blowup_of(cand_, kZero_)) return true;  // admissible zero, not a Lisca string
            return sink_(cand_, spent);
        }
        if (spent == max_deficit_) return close_forced(i, kc, kp);
        const Int& di = d_[i - 1];
        Int room = max_deficit_ - spent;
        if (di - 1 < room) room = di - 1;  // entries stay >= 1
        for (Int drop = 0; drop <= room; ++drop) {
            Int a = di - drop;
            Int nk = a * kc - kp;
            if (i >= 2 && nk == 0) continue;
            cand_[i - 1] = a;
            if (!descend(i - 1, spent + drop, nk, kc)) return false;
        }
        return true;
    }

    // No deficit left: positions 1..i are forced to the dual itself, so the
    // total continuant splits as K(1..i) K(i+1..n) - K(1..i-1) K(i+2..n).
    bool close_forced(std::size_t i, const Int& kc, const Int& kp) {
        Int total = prefix_[i] * kc - (i >= 1 ? prefix_[i - 1] : Int(0)) * kp;
        if (total != 0) return true;
        for (std::size_t j = 0; j < i; ++j) cand_[j] = d_[j];
        // the forced stretch still has to divide cleanly: K(j..n) != 0 down to j = 2
        Int c = kc, p = kp, t;
        for (std::size_t j = i; j >= 2; --j) {
            t = d_[j - 1] * c - p;
            p = c;
            c = t;
            if (c == 0) return true;
        }
        if (!is_blowup_of(cand_, kZero_)) return true;
        return sink_(cand_, max_deficit_);
    }

    const CFString& d_;
    Int max_deficit_;
    std::function<bool(const CFString&, const Int&)> sink_;
    CFString cand_;
    std::vector<Int> prefix_;
    const CFString kZero_{Int(0)};
};

std::vector<Filling> fillings_by_table(const LensSpace& lens, const CFString& dual) {
    const int n = static_cast<int>(dual.size());
    const ZeroStringTable& table = zero_string_table(n);
    Int total = 0;
    for (const Int& a : dual) total += a;
    std::vector<Filling> out;
    for (std::size_t r = 0; r < table.count; ++r) {
        const std::int32_t* row = table.flat.data() + r * n;
        bool dominated = true;
        Int sum = 0;
        for (int j = 0; j < n && dominated; ++j) {
            if (dual[j] < row[j]) dominated = false;
            sum += row[j];
        }
        if (!dominated) continue;
        Filling f;
        f.lens = lens;
        f.dual_string = dual;
        f.zero_string.assign(n, Int(0));
        for (int j = 0; j < n; ++j) f.zero_string[j] = Int(row[j]);
        f.euler = total - sum;
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Filling& a, const Filling& b) {
        if (a.euler != b.euler) return a.euler < b.euler;
        return std::lexicographical_compare(a.zero_string.begin(), a.zero_string.end(),
                                            b.zero_string.begin(), b.zero_string.end());
    });
    return out;
}

}  // namespace

std::vector<Filling> fillings(const LensSpace& lens) {
    CFString dual = dual_string_of(lens);
    if (static_cast<int>(dual.size()) > kEnumerationCap)
        throw std::length_error("fillings: dual string longer than the enumeration cap " +
                                std::to_string(kEnumerationCap));
    return fillings_by_table(lens, dual);
}

namespace {

// Iterative deepening over the deficit; each level costs roughly a binomial in
// (length, budget), so this is the cheap route exactly when the answer is small.
std::optional<Int> min_deficit_search(const CFString& dual, const Int& cap) {
    for (Int budget = 0; budget <= cap; ++budget) {
        bool found = false;
        DominatedSearch search(dual, budget, [&](const CFString&, const Int&) {
            found = true;
            return false;
        });
        search.run();
        if (found) return budget;
    }
    return std::nullopt;
}

// Small-deficit probe bound, and the dual length up to which a large minimum
// falls back to a table scan. Short duals can pair with arbitrarily large
// minima (entries can be huge), where the tiny tables win; from length 10 up
// a large minimum cannot coexist with a long dual at desk scale (the numerator
// grows too fast), so deepening the search stays cheap.
const Int kQuickProbe = 4;
constexpr int kMinViaTableLimit = 9;

}  // namespace

Int min_filling_euler(const LensSpace& lens) {
    CFString dual = dual_string_of(lens);
    const std::size_t n = dual.size();
    if (n == 1) return dual[0];
    Int total = 0;
    for (const Int& a : dual) total += a;
    Int upper = total - Int(2 * static_cast<long>(n) - 2);  // deficit of [1,2,..,2,1]
    Int probe = upper < kQuickProbe ? upper : kQuickProbe;
    if (auto m = min_deficit_search(dual, probe)) return *m;
    if (static_cast<int>(n) <= kMinViaTableLimit)
        return fillings_by_table(lens, dual).front().euler;
    return *min_deficit_search(dual, upper);  // attained at the latest by [1,2,..,2,1]
}

std::vector<CFString> minimal_fillings(const LensSpace& lens, Int* min_out) {
    CFString dual = dual_string_of(lens);
    const std::size_t n = dual.size();
    std::vector<CFString> out;
    Int best;
    if (n == 1) {
        best = dual[0];
        out.push_back(CFString{Int(0)});
    } else {
        best = min_filling_euler(lens);
        if (best > kQuickProbe && static_cast<int>(n) <= kMinViaTableLimit) {
            auto all = fillings_by_table(lens, dual);
            for (const Filling& f : all) {
                if (f.euler != best) break;
                out.push_back(f.zero_string);
            }
        } else {
            DominatedSearch search(dual, best, [&](const CFString& zero, const Int& deficit) {
                if (deficit == best) out.push_back(zero);
                return true;
            });
            search.run();
            std::sort(out.begin(), out.end());
        }
    }
    if (min_out) *min_out = best;
    return out;
}

bool has_filling_with_euler(const LensSpace& lens, const Int& k) {
    if (k < 0) return false;
    CFString dual = dual_string_of(lens);
    if (dual.size() == 1) return dual[0] == k;
    bool found = false;
    DominatedSearch search(dual, k, [&](const CFString&, const Int& deficit) {
        if (deficit == k) {
            found = true;
            return false;
        }
        return true;
    });
    search.run();
    return found;
}

bool is_k_replaceable(const CFString& framings, const Int& k) {
    return has_filling_with_euler(boundary_of(framings), k);
}

namespace {

TwoReplaceableWitness classify_witness(const CFString& dual, const CFString& zero) {
    TwoReplaceableWitness w;
    w.zero_string = zero;
    w.difference.reserve(dual.size());
    for (std::size_t i = 0; i < dual.size(); ++i) {
        w.difference.push_back(dual[i] - zero[i]);
        if (zero[i] < dual[i]) w.bump_positions.push_back(i + 1);
    }
    if (zero.size() == 1) {
        w.form = 2;  // [0] with a double bump
        return w;
    }
    if (w.bump_positions.size() == 1) {
        w.form = 2;
    } else {
        int ones_bumped = 0;
        for (std::size_t pos : w.bump_positions)
            if (zero[pos - 1] == 1) ++ones_bumped;
        w.form = (ones_bumped == 2) ? 3 : 1;
    }
    return w;
}

}  // namespace

std::vector<TwoReplaceableWitness> two_replaceable_witnesses(const LensSpace& lens) {
    CFString dual = dual_string_of(lens);
    std::vector<TwoReplaceableWitness> out;
    if (dual.size() == 1) {
        if (dual[0] == 2) out.push_back(classify_witness(dual, CFString{Int(0)}));
        return out;
    }
    DominatedSearch search(dual, Int(2), [&](const CFString& zero, const Int& deficit) {
        if (deficit == 2) out.push_back(classify_witness(dual, zero));
        return true;
    });
    search.run();
    std::sort(out.begin(), out.end(), [](const TwoReplaceableWitness& a, const TwoReplaceableWitness& b) {
        return std::lexicographical_compare(a.zero_string.begin(), a.zero_string.end(),
                                            b.zero_string.begin(), b.zero_string.end());
    });
    return out;
}

bool casson_harer_predicate(const LensSpace& lens) {
    if (mpz_perfect_square_p(lens.p.get_mpz_t()) == 0) return false;
    Int n;
    mpz_sqrt(n.get_mpz_t(), lens.p.get_mpz_t());
    Int qp1 = lens.q + 1;
    if (qp1 % n != 0) return false;
    Int m = qp1 / n;
    if (m < 1) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return g == 1;
}

const char* family_tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::trivial: return "trivial";
        case FamilyTag::a: return "a";
        case FamilyTag::b: return "b";
        case FamilyTag::c: return "c";
        case FamilyTag::d: return "d";
    }
    return "?";
}

std::map<CFString, FamilyTag> theorem1_families(int max_len, int max_entry) {
    if (max_len < 1 || max_entry < 2)
        throw std::invalid_argument("theorem1_families: need max_len >= 1, max_entry >= 2");
    std::map<CFString, FamilyTag> fam;
    auto keep = [&](const CFString& s, FamilyTag tag) {
        if (static_cast<int>(s.size()) > max_len) return;
        for (const Int& a : s)
            if (a < 2 || a > max_entry) return;
        fam.emplace(s, tag);  // first tag wins
    };

    static const CFString four{Int(4)};
    std::vector<CFString> arms =
        max_len >= 2 ? budding_closure(four, max_len - 1) : std::vector<CFString>{four};

    for (long z = 2; z <= max_entry; ++z) keep(CFString{Int(z)}, FamilyTag::trivial);

    std::vector<CFString> arm_opts;
    arm_opts.push_back(CFString{});
    arm_opts.insert(arm_opts.end(), arms.begin(), arms.end());
    for (const CFString& b : arm_opts) {
        for (const CFString& c : arm_opts) {
            if (static_cast<int>(b.size() + c.size()) + 1 > max_len) continue;
            for (long z = 2; z <= max_entry; ++z) {
                CFString m = b;
                m.push_back(Int(z));
                m.insert(m.end(), c.begin(), c.end());
                keep(m, FamilyTag::a);
            }
        }
    }

    for (const CFString& b : arms) {
        if (static_cast<int>(b.size()) + 1 > max_len) continue;
        CFString right = b;
        right.push_back(2);
        CFString left{Int(2)};
        left.insert(left.end(), b.begin(), b.end());
        for (const CFString& base : {right, left})
            for (const CFString& m : budding_closure(base, max_len)) keep(m, FamilyTag::b);
    }

    if (max_len >= 2) {
        static const CFString threethree{Int(3), Int(3)};
        for (const CFString& m : budding_closure(threethree, max_len)) keep(m, FamilyTag::c);
    }

    for (const CFString& b : arms) {
        for (const CFString& c : arms) {
            if (static_cast<int>(b.size() + c.size()) + 2 > max_len) continue;
            CFString base{Int(2)};
            base.insert(base.end(), b.begin(), b.end());
            base.insert(base.end(), c.begin(), c.end());
            base.push_back(Int(2));
            for (const CFString& m : budding_closure(base, max_len)) keep(m, FamilyTag::d);
        }
    }
    return fam;
}

Theorem1Report verify_theorem1(int max_len, int max_entry, std::size_t budget) {
    Theorem1Report report;
    report.max_len = max_len;
    report.max_entry = max_entry;
    auto fam = theorem1_families(max_len, max_entry);
    report.family = fam.size();
    std::set<CFString> replaceable;

    CFString f;
    // odometer over all framing sequences with entries in [2, max_entry]
    for (int len = 1; len <= max_len && report.complete; ++len) {
        f.assign(len, Int(2));
        while (true) {
            if (report.searched >= budget) {
                report.complete = false;
                break;
            }
            ++report.searched;
            if (is_k_replaceable(f, 2)) replaceable.insert(f);
            int pos = len - 1;
            while (pos >= 0 && f[pos] == max_entry) {
                f[pos] = 2;
                --pos;
            }
            if (pos < 0) break;
            f[pos] += 1;
        }
    }
    report.replaceable = replaceable.size();

    for (const CFString& f1 : replaceable) {
        if (!fam.count(f1)) {
            Theorem1Report::OracleOnly x;
            x.framings = f1;
            x.dual_string = dual_string_of(boundary_of(f1));
            auto ws = two_replaceable_witnesses(boundary_of(f1));
            if (!ws.empty()) x.witness = ws.front();
            report.only_oracle.push_back(std::move(x));
        }
    }
    for (const auto& [m, tag] : fam) {
        if (!replaceable.count(m)) report.only_family.push_back({m, tag});
    }
    return report;
}

}  // namespace plumbcalc
