#include "plumbcalc/palf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plumbcalc {

void validate_factorization(const Factorization& f) {
    if (f.holes < 0) throw std::invalid_argument("factorization: negative hole count");
    for (const auto& s : f.twists) {
        if (s.empty()) throw std::invalid_argument("factorization: empty twist subset");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > f.holes)
                throw std::invalid_argument("factorization: hole id out of range");
            if (i > 0 && s[i] <= s[i - 1])
                throw std::invalid_argument("factorization: twist subset not sorted/unique");
        }
    }
}

int euler_char_palf(const Factorization& f) {
    validate_factorization(f);
    return 1 - f.holes + static_cast<int>(f.twists.size());
}

std::vector<Int> h1_total(const Factorization& f) {
    validate_factorization(f);
    IntMatrix m(static_cast<int>(f.twists.size()), f.holes);
    for (std::size_t r = 0; r < f.twists.size(); ++r)
        for (int i : f.twists[r]) m.at(static_cast<int>(r), i - 1) = 1;
    return nontrivial_cokernel_invariants(m);
}

IntMatrix boundary_linking_matrix(const Factorization& f) {
    validate_factorization(f);
    const int h = f.holes;
    const int t = static_cast<int>(f.twists.size());
    IntMatrix m(h + t, h + t);
    for (int j = 0; j < t; ++j) {
        for (int i : f.twists[j]) {
            m.at(i - 1, h + j) = 1;
            m.at(h + j, i - 1) = 1;
        }
        m.at(h + j, h + j) = -1;
    }
    return m;
}

std::vector<Int> boundary_h1_palf(const Factorization& f) {
    return nontrivial_cokernel_invariants(boundary_linking_matrix(f));
}

namespace {

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r.empty();
}

Factorization splice(const Factorization& f, const std::set<std::size_t>& removed,
                     const std::vector<std::vector<int>>& inserted) {
    Factorization out;
    out.holes = f.holes;
    const std::size_t site = *removed.begin();
    for (std::size_t i = 0; i < f.twists.size(); ++i) {
        if (i == site) out.twists.insert(out.twists.end(), inserted.begin(), inserted.end());
        if (!removed.count(i)) out.twists.push_back(f.twists[i]);
    }
    return out;
}

void require_boundary_preserved(const Factorization& before, const Factorization& after,
                                const char* who) {
    if (boundary_h1_palf(before) != boundary_h1_palf(after))
        throw std::domain_error(std::string(who) + ": substitution changed the boundary H_1");
}

}  // namespace

Factorization lantern_substitute(const Factorization& f, std::size_t pos_a, std::size_t pos_b,
                                 std::size_t pos_c, std::size_t pos_full) {
    validate_factorization(f);
    std::set<std::size_t> removed{pos_a, pos_b, pos_c, pos_full};
    if (removed.size() != 4 || *removed.rbegin() >= f.twists.size())
        throw std::invalid_argument("lantern: positions must be four distinct twist indices");
    const auto& a = f.twists[pos_a];
    const auto& b = f.twists[pos_b];
    const auto& c = f.twists[pos_c];
    if (!disjoint(a, b) || !disjoint(a, c) || !disjoint(b, c))
        throw std::domain_error("lantern: A, B, C must be pairwise disjoint");
    if (f.twists[pos_full] != set_union(set_union(a, b), c))
        throw std::domain_error("lantern: fourth twist must be the union of A, B, C");
    Factorization out =
        splice(f, removed, {set_union(a, b), set_union(a, c), set_union(b, c)});
    require_boundary_preserved(f, out, "lantern");
    return out;
}

Factorization daisy_substitute(const Factorization& f, const std::vector<std::size_t>& center_positions,
                               const std::vector<std::size_t>& petal_positions, std::size_t full_position) {
    validate_factorization(f);
    const std::size_t k = petal_positions.size();
    if (k < 2) throw std::domain_error("daisy: need at least two petals");
    if (center_positions.size() != k - 1)
        throw std::domain_error("daisy: center multiplicity must be one less than the petal count");
    std::set<std::size_t> removed(center_positions.begin(), center_positions.end());
    removed.insert(petal_positions.begin(), petal_positions.end());
    removed.insert(full_position);
    if (removed.size() != 2 * k || *removed.rbegin() >= f.twists.size())
        throw std::invalid_argument("daisy: positions must be distinct twist indices");
    const auto& center = f.twists[center_positions.front()];
    for (std::size_t p : center_positions)
        if (f.twists[p] != center) throw std::domain_error("daisy: center twists differ");
    std::vector<int> u = center;
    for (std::size_t p : petal_positions) {
        if (!disjoint(f.twists[p], u))
            throw std::domain_error("daisy: center and petals must be pairwise disjoint");
        u = set_union(u, f.twists[p]);
    }
    if (f.twists[full_position] != u)
        throw std::domain_error("daisy: designated twist must be the union of center and petals");
    std::vector<std::vector<int>> outputs;
    for (std::size_t p : petal_positions) outputs.push_back(set_union(center, f.twists[p]));
    outputs.push_back(set_difference(u, center));
    Factorization out = splice(f, removed, outputs);
    require_boundary_preserved(f, out, "daisy");
    return out;
}

Factorization split_hole(const Factorization& f, int hole,
                         const std::vector<std::pair<std::size_t, SplitAssign>>& reassign,
                         const std::vector<std::vector<int>>& appended) {
    validate_factorization(f);
    if (hole < 1 || hole > f.holes) throw std::invalid_argument("split_hole: hole out of range");
    std::set<std::size_t> mentioned;
    for (const auto& [t, _] : reassign) {
        if (t >= f.twists.size()) throw std::invalid_argument("split_hole: twist index out of range");
        if (!std::binary_search(f.twists[t].begin(), f.twists[t].end(), hole))
            throw std::invalid_argument("split_hole: reassigned twist does not contain the hole");
        if (!mentioned.insert(t).second)
            throw std::invalid_argument("split_hole: twist reassigned twice");
    }
    for (std::size_t t = 0; t < f.twists.size(); ++t)
        if (std::binary_search(f.twists[t].begin(), f.twists[t].end(), hole) && !mentioned.count(t))
            throw std::invalid_argument("split_hole: twist containing the hole left unassigned");

    Factorization out;
    out.holes = f.holes + 1;
    out.twists = f.twists;
    const int right = out.holes;
    for (const auto& [t, how] : reassign) {
        auto& s = out.twists[t];
        if (how == SplitAssign::right) {
            s.erase(std::find(s.begin(), s.end(), hole));
            s.push_back(right);
        } else if (how == SplitAssign::both) {
            s.push_back(right);
        }
        std::sort(s.begin(), s.end());
    }
    out.twists.insert(out.twists.end(), appended.begin(), appended.end());
    validate_factorization(out);
    return out;
}

KeyPairReport key_pair_check(const Factorization& c_side, const Factorization& b_side) {
    if (c_side.holes != b_side.holes)
        throw std::invalid_argument("key_pair_check: the two sides must share the page");
    KeyPairReport r;
    r.holes = c_side.holes;
    r.euler_c = euler_char_palf(c_side);
    r.euler_b = euler_char_palf(b_side);
    r.boundary_c = boundary_h1_palf(c_side);
    r.boundary_b = boundary_h1_palf(b_side);
    r.boundary_equal = (r.boundary_c == r.boundary_b);
    r.b_h1_total = h1_total(b_side);
    return r;
}

Factorization seed_x_system() {
    Factorization f;
    f.holes = 5;
    f.twists = {{1}, {1}, {2}, {3}, {4}, {1, 2, 3}, {5}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}};
    return f;
}

Factorization seed_abcdef() {
    Factorization f;
    f.holes = 5;
    f.twists = {{1, 2}, {1, 3}, {1, 4, 5}, {2, 3, 4, 5}, {1, 2, 3, 4}, {1, 2, 3, 5}};
    return f;
}

Factorization thm2a_bside(int n) {
    if (n < 2) throw std::invalid_argument("thm2a_bside: need n >= 2");
    Factorization f;
    f.holes = n + 3;
    for (int i = 1; i <= n - 1; ++i) f.twists.push_back({i, n + 2, n + 3});
    f.twists.push_back({n, n + 1, n + 2, n + 3});
    std::vector<int> w;
    for (int i = 1; i <= n; ++i) w.push_back(i);
    f.twists.push_back(w);  // {1..n}
    w.push_back(n + 1);
    w.push_back(n + 2);
    f.twists.push_back(w);  // {1..n+2}
    std::vector<int> x;
    for (int i = 1; i <= n - 1; ++i) x.push_back(i);
    x.push_back(n + 1);
    f.twists.push_back(x);  // {1..n-1, n+1}
    std::vector<int> y;
    for (int i = 1; i <= n + 1; ++i) y.push_back(i);
    y.push_back(n + 3);
    f.twists.push_back(y);  // {1..n+1, n+3}
    return f;
}

std::optional<Factorization> named_factorization(const std::string& name) {
    if (name == "seed-x") return seed_x_system();
    if (name == "seed-abcdef") return seed_abcdef();
    const std::string prefix = "thm2a-bside:";
    if (name.rfind(prefix, 0) == 0) {
        try {
            int n = std::stoi(name.substr(prefix.size()));
            if (n >= 2) return thm2a_bside(n);
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace plumbcalc
