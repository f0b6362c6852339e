#include "plumbcalc/budding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plumbcalc {

CFString bud_left(const CFString& s) {
    if (s.empty()) throw std::invalid_argument("bud_left: empty sequence");
    CFString t;
    t.reserve(s.size() + 1);
    t.push_back(2);
    t.insert(t.end(), s.begin(), s.end());
    t.back() += 1;
    return t;
}

CFString bud_right(const CFString& s) {
    if (s.empty()) throw std::invalid_argument("bud_right: empty sequence");
    CFString t = s;
    t.front() += 1;
    t.push_back(2);
    return t;
}

std::vector<CFString> debud(const CFString& s) {
    std::vector<CFString> out;
    if (s.size() < 2) return out;
    if (s.front() == 2 && s.back() > 1) {
        CFString t(s.begin() + 1, s.end());
        t.back() -= 1;
        out.push_back(std::move(t));
    }
    if (s.back() == 2 && s.front() > 1) {
        CFString t(s.begin(), s.end() - 1);
        t.front() -= 1;
        if (out.empty() || out.front() != t) out.push_back(std::move(t));  // a set, not a list
    }
    return out;
}

namespace {

bool debud_reaches(const CFString& s, const CFString& base, std::set<CFString>& failed) {
    if (s == base) return true;
    if (s.size() <= base.size()) return false;
    if (failed.count(s)) return false;
    for (const CFString& t : debud(s))
        if (debud_reaches(t, base, failed)) return true;
    failed.insert(s);
    return false;
}

}  // namespace

bool is_budding_of(const CFString& s, const CFString& base) {
    std::set<CFString> failed;
    return debud_reaches(s, base, failed);
}

std::vector<CFString> budding_closure(const CFString& base, int max_len) {
    if (base.empty()) throw std::invalid_argument("budding_closure: empty base");
    if (max_len < static_cast<int>(base.size()))
        throw std::invalid_argument("budding_closure: max_len below base length");
    std::set<CFString> seen{base};
    std::vector<CFString> frontier{base};
    while (!frontier.empty()) {
        std::vector<CFString> next;
        for (const CFString& s : frontier) {
            if (static_cast<int>(s.size()) >= max_len) continue;
            for (CFString t : {bud_left(s), bud_right(s)})
                if (seen.insert(t).second) next.push_back(std::move(t));
        }
        frontier = std::move(next);
    }
    std::vector<CFString> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const CFString& a, const CFString& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

bool is_one_replaceable(const CFString& framings) {
    if (!is_expansion_string(framings))
        throw std::domain_error("is_one_replaceable: framing entries must all be >= 2");
    static const CFString four{Int(4)};
    return is_budding_of(framings, four);
}

}  // namespace plumbcalc
