#include "plumbcalc/zerostrings.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace plumbcalc {

namespace {

const CFString kZero{Int(0)};

// Blowdown search. Decides whether s reaches `base` by blowdowns, branching over
// every entry equal to 1. The cache is shared across calls and keyed by (base, s).
struct ReachCache {
    std::mutex mu;
    std::map<std::pair<CFString, CFString>, bool> memo;
};

ReachCache& reach_cache() {
    static ReachCache c;
    return c;
}

bool reaches(const CFString& s, const CFString& base) {
    if (s == base) return true;
    if (s.size() <= base.size()) return false;
    {
        std::lock_guard<std::mutex> lock(reach_cache().mu);
        auto it = reach_cache().memo.find({base, s});
        if (it != reach_cache().memo.end()) return it->second;
    }
    bool ok = false;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n && !ok; ++i) {
        if (s[i] != 1) continue;
        CFString t;
        t.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) t.push_back(s[j]);
        if (i >= 1) t[i - 1] -= 1;
        if (i < t.size()) t[i] -= 1;
        // entries must stay positive except for the terminal [0]
        if (t.size() >= 2 &&
            !std::all_of(t.begin(), t.end(), [](const Int& a) { return a >= 1; }))
            continue;
        ok = reaches(t, base);
    }
    {
        std::lock_guard<std::mutex> lock(reach_cache().mu);
        reach_cache().memo.emplace(std::make_pair(base, s), ok);
    }
    return ok;
}

void require_zero_string(const CFString& s, const char* who) {
    if (!is_zero_string(s)) throw std::domain_error(std::string(who) + ": not a zero string");
}

}  // namespace

bool is_blowup_of(const CFString& s, const CFString& base) {
    return reaches(s, base);
}

bool is_zero_string(const CFString& s) {
    return is_admissible_zero(s) && reaches(s, kZero);
}

CFString blowup_before(const CFString& s, std::size_t i) {
    require_zero_string(s, "blowup_before");
    const std::size_t n = s.size();
    if (i < 1 || i > n) throw std::out_of_range("blowup_before: position out of range");
    CFString t;
    t.reserve(n + 1);
    for (std::size_t j = 0; j + 1 < i; ++j) t.push_back(s[j]);
    if (i >= 2) t.back() += 1;
    t.push_back(1);
    for (std::size_t j = i - 1; j < n; ++j) t.push_back(s[j]);
    t[i] += 1;  // old a_i, now right of the inserted 1
    return t;
}

CFString blowup_after(const CFString& s, std::size_t i) {
    require_zero_string(s, "blowup_after");
    const std::size_t n = s.size();
    if (i < 1 || i > n) throw std::out_of_range("blowup_after: position out of range");
    CFString t;
    t.reserve(n + 1);
    for (std::size_t j = 0; j < i; ++j) t.push_back(s[j]);
    t.back() += 1;
    t.push_back(1);
    for (std::size_t j = i; j < n; ++j) t.push_back(s[j]);
    if (i < n) t[i + 1] += 1;
    return t;
}

CFString blowdown_at(const CFString& s, std::size_t i) {
    require_zero_string(s, "blowdown_at");
    const std::size_t n = s.size();
    if (i < 1 || i > n) throw std::out_of_range("blowdown_at: position out of range");
    if (s[i - 1] != 1) throw std::domain_error("blowdown_at: entry is not 1");
    CFString t;
    t.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != i - 1) t.push_back(s[j]);
    if (i >= 2) t[i - 2] -= 1;
    if (i - 1 < t.size()) t[i - 1] -= 1;
    return t;
}

const ZeroStringTable& zero_string_table(int n) {
    if (n < 1 || n > kEnumerationCap)
        throw std::domain_error("zero_string_table: length outside [1, " +
                                std::to_string(kEnumerationCap) + "]");
    static std::mutex mu;
    static std::vector<ZeroStringTable> levels;  // levels[k] holds length k+1
    std::lock_guard<std::mutex> lock(mu);
    if (levels.empty()) {
        ZeroStringTable base;
        base.length = 1;
        base.count = 1;
        base.flat = {0};
        levels.push_back(std::move(base));
    }
    while (static_cast<int>(levels.size()) < n) {
        const ZeroStringTable& prev = levels.back();
        const int m = prev.length;
        const int len = m + 1;
        // every blowup inserts a 1 into one of m+1 gaps and increments the neighbors
        std::vector<std::int32_t> rows;
        rows.reserve(prev.count * (m + 1) * len);
        std::vector<std::int32_t> child(len);
        for (std::size_t r = 0; r < prev.count; ++r) {
            const std::int32_t* row = prev.flat.data() + r * m;
            for (int g = 0; g <= m; ++g) {
                for (int j = 0; j < g; ++j) child[j] = row[j];
                child[g] = 1;
                for (int j = g; j < m; ++j) child[j + 1] = row[j];
                if (g - 1 >= 0) child[g - 1] += 1;
                if (g + 1 < len) child[g + 1] += 1;
                rows.insert(rows.end(), child.begin(), child.end());
            }
        }
        const std::size_t total = rows.size() / len;
        std::vector<std::size_t> order(total);
        std::iota(order.begin(), order.end(), 0);
        auto cmp = [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(rows.begin() + a * len, rows.begin() + (a + 1) * len,
                                                rows.begin() + b * len, rows.begin() + (b + 1) * len);
        };
        auto eq = [&](std::size_t a, std::size_t b) {
            return std::equal(rows.begin() + a * len, rows.begin() + (a + 1) * len,
                              rows.begin() + b * len);
        };
        std::sort(order.begin(), order.end(), cmp);
        ZeroStringTable next;
        next.length = len;
        for (std::size_t k = 0; k < total; ++k) {
            if (k > 0 && eq(order[k], order[k - 1])) continue;
            next.flat.insert(next.flat.end(), rows.begin() + order[k] * len,
                             rows.begin() + (order[k] + 1) * len);
            ++next.count;
        }
        levels.push_back(std::move(next));
    }
    return levels[n - 1];
}

std::vector<CFString> enumerate_zero_strings(int n) {
    const ZeroStringTable& t = zero_string_table(n);
    std::vector<CFString> out;
    out.reserve(t.count);
    for (std::size_t r = 0; r < t.count; ++r) {
        CFString s(t.length);
        for (int j = 0; j < t.length; ++j) s[j] = Int(t.flat[r * t.length + j]);
        out.push_back(std::move(s));
    }
    return out;
}

int ones_count(const CFString& s) {
    return static_cast<int>(std::count(s.begin(), s.end(), Int(1)));
}

std::vector<std::size_t> ones_positions(const CFString& s) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 1) out.push_back(i + 1);
    return out;
}

BaseType base_type(const CFString& s) {
    require_zero_string(s, "base_type");
    if (s.size() == 1) return BaseType::single_zero;
    if (s.size() == 2) return BaseType::one_one;
    static const CFString k121{Int(1), Int(2), Int(1)};
    static const CFString k212{Int(2), Int(1), Int(2)};
    if (reaches(s, k121)) return BaseType::blowup_of_121;
    return BaseType::blowup_of_212_only;  // every zero string of length >= 3 reaches one of the two
}

Rational plus_one_tail_value(const CFString& s) {
    if (base_type(s) != BaseType::blowup_of_212_only)
        throw std::domain_error("plus_one_tail_value: requires a blowup of [2,1,2] only");
    CFString t = s;
    t.back() += 1;
    return cf_eval(t);
}

}  // namespace plumbcalc
