#include "plumbcalc/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace plumbcalc {

void validate_tree(const PlumbingTree& t) {
    if (t.vertices.empty()) throw std::invalid_argument("plumbing tree: no vertices");
    std::set<int> ids;
    for (const auto& v : t.vertices)
        if (!ids.insert(v.id).second) throw std::invalid_argument("plumbing tree: duplicate vertex id");
    for (const auto& [x, y] : t.edges) {
        if (!ids.count(x) || !ids.count(y)) throw std::invalid_argument("plumbing tree: edge on unknown id");
        if (x == y) throw std::invalid_argument("plumbing tree: self loop");
    }
    if (t.edges.size() + 1 != t.vertices.size())
        throw std::invalid_argument("plumbing tree: edge count must be vertex count - 1");
    // connectivity (acyclicity follows from the edge count)
    std::map<int, std::vector<int>> adj;
    for (const auto& [x, y] : t.edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::set<int> seen{t.vertices.front().id};
    std::vector<int> stack{t.vertices.front().id};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != t.vertices.size()) throw std::invalid_argument("plumbing tree: not connected");
}

PlumbingTree linear_chain(const CFString& entries) {
    if (entries.empty()) throw std::invalid_argument("linear_chain: empty");
    PlumbingTree t;
    for (std::size_t i = 0; i < entries.size(); ++i)
        t.vertices.push_back({static_cast<int>(i) + 1, -entries[i]});
    for (std::size_t i = 1; i < entries.size(); ++i)
        t.edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
    return t;
}

IntMatrix intersection_matrix(const PlumbingTree& t) {
    validate_tree(t);
    std::vector<const PlumbingTree::Vertex*> order;
    for (const auto& v : t.vertices) order.push_back(&v);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return a->id < b->id; });
    std::map<int, int> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]->id] = static_cast<int>(i);
    IntMatrix m(static_cast<int>(order.size()), static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = order[i]->framing;
    for (const auto& [x, y] : t.edges) {
        m.at(index[x], index[y]) = 1;
        m.at(index[y], index[x]) = 1;
    }
    return m;
}

std::vector<Int> boundary_h1(const PlumbingTree& t) {
    return nontrivial_cokernel_invariants(intersection_matrix(t));
}

Int plumbing_euler(const PlumbingTree& t) {
    return Int(1) + Int(static_cast<long>(t.vertices.size()));
}

Int plumbing_signature(const PlumbingTree& t) {
    Inertia s = signature_exact(intersection_matrix(t));
    return Int(s.positive - s.negative);
}

std::vector<Int> abelianization(const Presentation& p) {
    if (p.generators < 0) throw std::invalid_argument("abelianization: negative generator count");
    IntMatrix m(static_cast<int>(p.relators.size()), p.generators);
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (int x : p.relators[r]) {
            if (x == 0 || std::abs(x) > p.generators)
                throw std::invalid_argument("abelianization: relator index out of range");
            m.at(static_cast<int>(r), std::abs(x) - 1) += (x > 0 ? 1 : -1);
        }
    }
    return nontrivial_cokernel_invariants(m);
}

Int pairing(const AmbientClass& x, const AmbientClass& y) {
    if (x.e.size() != y.e.size()) throw std::invalid_argument("pairing: ambient mismatch");
    Int r = x.h * y.h;
    for (std::size_t i = 0; i < x.e.size(); ++i) r -= x.e[i] * y.e[i];
    return r;
}

IntMatrix gram_matrix(const std::vector<AmbientClass>& classes) {
    const int n = static_cast<int>(classes.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = pairing(classes[i], classes[j]);
    return m;
}

Int boundary_class_order(const IntMatrix& m, const std::vector<Int>& v) {
    if (m.rows != m.cols || !m.is_symmetric())
        throw std::invalid_argument("boundary_class_order: matrix must be square symmetric");
    if (static_cast<int>(v.size()) != m.rows)
        throw std::invalid_argument("boundary_class_order: vector length mismatch");
    SmithResult snf = smith_normal_form(m);
    for (int i = 0; i < m.rows; ++i)
        if (snf.d.at(i, i) == 0) throw std::domain_error("boundary_class_order: singular matrix");
    // image of v in coker(M) in SNF coordinates is U*v
    std::vector<Int> w(m.rows, Int(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) w[i] += snf.u.at(i, j) * v[j];
    Int order = 1;
    for (int i = 0; i < m.rows; ++i) {
        const Int& d = snf.d.at(i, i);
        Int g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), w[i].get_mpz_t());
        Int oi = d / g;  // gcd(d, 0) = d, so a zero coordinate contributes 1
        Int l;
        mpz_lcm(l.get_mpz_t(), order.get_mpz_t(), oi.get_mpz_t());
        order = l;
    }
    return order;
}

ChiSigma glue_invariants(const ChiSigma& ambient, const ChiSigma& removed, const ChiSigma& glued) {
    return {ambient.chi - removed.chi + glued.chi, ambient.sigma - removed.sigma + glued.sigma};
}

}  // namespace plumbcalc
